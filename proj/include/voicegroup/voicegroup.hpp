#pragma once

/**
 * @file voicegroup.hpp
 * @brief Umbrella header.
 */

#include "modring.hpp"
#include "linalg.hpp"
#include "voicing.hpp"
#include "extension.hpp"
#include "structure.hpp"
#include "triadic.hpp"
#include "analysis.hpp"
#include "text.hpp"
#include "io.hpp"
