#pragma once

/**
 * @file text.hpp
 * @brief Parsing of the textual forms used on the command line.
 *
 * Elements are products of factors, each optionally raised to an integer
 * power:
 *
 *     U  V  W  Id  (13)  (123)  (UV)^11  (13) U (UW)^1  (UV)^4 (UW)^-1
 *
 * Permutations are cycles without commas; anything else in parentheses is
 * a sub-expression. Vectors and matrices use commas: (3,7,10) or
 * [3,7,10], and [[0,1,0],[1,0,0],[1,1,11]]. Transformations of triads are
 * written <+,7,-7>.
 */

#include <cctype>
#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "triadic.hpp"

namespace vg {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class ElementParser {
public:
    ElementParser(std::string_view text, Modulus n) : s_(text), n_(n) {}

    ExtElement parse() {
        ExtElement e = product();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse element \"" + std::string(s_) + "\" at " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size()) {
            const unsigned char c = static_cast<unsigned char>(s_[pos_]);
            if (std::isspace(c) || c == '*' || c == '.') {
                ++pos_;
            } else if (c == 0xC2 && pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_ + 1]) == 0xB7) {
                pos_ += 2;  // middle dot
            } else {
                break;
            }
        }
    }

    bool at_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == 'U' || c == 'V' || c == 'W' || c == 'I' || c == '(';
    }

    ExtElement product() {
        ExtElement acc = ExtElement::identity(n_);
        bool any = false;
        while (at_factor()) {
            acc = acc * power();
            any = true;
        }
        if (!any) fail("expected a factor");
        return acc;
    }

    ExtElement power() {
        ExtElement base = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            if (pos_ - start > 9) fail("exponent too large");
            const std::int64_t e = std::stoll(std::string(s_.substr(start, pos_ - start)));
            return ext_pow(base, neg ? -e : e);
        }
        return base;
    }

    ExtElement atom() {
        const char c = s_[pos_];
        if (c == 'U' || c == 'V' || c == 'W') {
            ++pos_;
            return ext_generator(c == 'U' ? GeneratorTag::U : c == 'V' ? GeneratorTag::V : GeneratorTag::W, n_);
        }
        if (c == 'I') {
            if (s_.substr(pos_, 2) != "Id") fail("expected Id");
            pos_ += 2;
            return ExtElement::identity(n_);
        }
        // c == '('
        std::size_t close = s_.find(')', pos_);
        if (close != std::string_view::npos) {
            const std::string_view inner = s_.substr(pos_ + 1, close - pos_ - 1);
            bool digits_only = true;
            for (char ch : inner)
                if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ' ') digits_only = false;
            if (digits_only) {
                pos_ = close + 1;
                return ExtElement(cycle(inner), n_);
            }
        }
        ++pos_;
        ExtElement inner = product();
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return inner;
    }

    Perm3 cycle(std::string_view inner) const {
        std::vector<int> pts;
        for (char ch : inner)
            if (ch != ' ') pts.push_back(ch - '0');
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i] < 1 || pts[i] > 3) fail("cycle entries must be 1, 2 or 3");
            for (std::size_t j = 0; j < i; ++j)
                if (pts[i] == pts[j]) fail("repeated point in cycle");
        }
        if (pts.size() <= 1) return Perm3();
        if (pts.size() == 2) return Perm3::swap(pts[0], pts[1]);
        return Perm3::cycle(pts[0], pts[1], pts[2]);
    }

    std::string_view s_;
    Modulus n_;
    std::size_t pos_ = 0;
};

inline std::int64_t json_integer(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace detail

inline ExtElement parse_element(std::string_view text, Modulus n) { return detail::ElementParser(text, n).parse(); }

inline Perm3 parse_perm(std::string_view text) {
    const ExtElement e = parse_element(text, Modulus(2));
    if (!e.j().is_identity()) throw ParseError("not a permutation: " + std::string(text));
    return e.sigma();
}

/// "(3,7,10)" or "[3,7,10]".
inline Vec3 parse_vec(std::string_view text, Modulus n) {
    std::string s(text);
    for (char& c : s) {
        if (c == '(') c = '[';
        if (c == ')') c = ']';
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::parse_error&) {
        throw ParseError("cannot parse vector \"" + std::string(text) + "\"");
    }
    if (!j.is_array() || j.size() != 3) throw ParseError("vector needs three entries: " + std::string(text));
    return Vec3(detail::json_integer(j[0], "vector"), detail::json_integer(j[1], "vector"),
                detail::json_integer(j[2], "vector"), n);
}

inline Mat3 mat_from_json(const nlohmann::json& j, Modulus n) {
    if (!j.is_array() || j.size() != 3) throw ParseError("matrix needs three rows");
    Mat3::Rows r{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3) throw ParseError("matrix rows need three entries");
        for (std::size_t k = 0; k < 3; ++k) r[i][k] = detail::json_integer(j[i][k], "matrix");
    }
    return Mat3(r, n);
}

/// "[[a,b,c],[d,e,f],[g,h,i]]", row-major.
inline Mat3 parse_mat(std::string_view text, Modulus n) {
    try {
        return mat_from_json(nlohmann::json::parse(text), n);
    } catch (const nlohmann::json::parse_error&) {
        throw ParseError("cannot parse matrix \"" + std::string(text) + "\"");
    }
}

/// "<+,m,n>" or "<-,m,n>"; entries may be negative.
inline UTT parse_utt(std::string_view text) {
    static const std::regex re(R"(\s*<\s*([+-])\s*,\s*(-?\d{1,9})\s*,\s*(-?\d{1,9})\s*>\s*)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, re)) throw ParseError("cannot parse UTT \"" + std::string(text) + "\"");
    return UTT(m[1] == "+" ? Sign::plus : Sign::minus, std::stoll(m[2]), std::stoll(m[3]));
}

/// Letter names: upper case major, lower case minor, with '#', 'b' or the flat/sharp signs.
inline TriadId parse_triad(std::string_view text) {
    static const std::regex re(R"(\s*([A-Ga-g])(#|b|♯|♭)?\s*)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, re)) throw ParseError("cannot parse triad \"" + std::string(text) + "\"");
    const char letter = m[1].str()[0];
    static const std::string letters = "CDEFGAB";
    static const int pcs[] = {0, 2, 4, 5, 7, 9, 11};
    const std::size_t idx = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(letter))));
    std::int64_t root = pcs[idx];
    if (m[2].matched) root += (m[2] == "#" || m[2] == "♯") ? 1 : -1;
    return TriadId(root, std::isupper(static_cast<unsigned char>(letter)) ? Mode::major : Mode::minor);
}

}  // namespace vg
