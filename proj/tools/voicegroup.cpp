// Command-line front end for the voicegroup library.
//
// Exit codes: 0 success, 1 parse error, 2 not in group, 3 search budget exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "voicegroup/voicegroup.hpp"

namespace {

enum class Format { text, json, dot };

struct Config {
    std::int64_t modulus = 12;
    Format format = Format::text;
};

void print(const Config& cfg, const vg::json& j, const std::string& text) {
    if (cfg.format == Format::json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string element_block(const vg::ExtElement& e) {
    std::ostringstream os;
    os << e << '\n' << e.matrix() << '\n';
    return os.str();
}

int run_normal_form(const Config& cfg, const std::string& word, const std::string& matrix, const std::string& element) {
    const vg::Modulus n(cfg.modulus);
    std::optional<vg::ExtElement> e;
    if (!matrix.empty())
        e = vg::ext_decode(vg::parse_mat(matrix, n));
    else
        e = vg::parse_element(!word.empty() ? word : element, n);
    print(cfg, vg::to_json(*e), element_block(*e));
    return 0;
}

int run_apply(const Config& cfg, const std::string& element, const std::string& vec) {
    const vg::Modulus n(cfg.modulus);
    const vg::ExtElement e = vg::parse_element(element, n);
    const vg::Vec3 w = e(vg::parse_vec(vec, n));
    print(cfg, vg::to_json(w), vg::vec_label(w) + "\n");
    return 0;
}

int run_solve(const Config& cfg, const std::string& input, const std::string& sigma, std::optional<int> k, bool cyclic,
              bool mod_given) {
    vg::Progression prog = vg::load_progression(input);
    if (mod_given && prog.modulus.value() != cfg.modulus)
        throw vg::ParseError("--mod " + std::to_string(cfg.modulus) + " does not match the file's modulus " +
                             std::to_string(prog.modulus.value()));
    if (cyclic) prog.cyclic = true;

    std::vector<vg::UniformSolution> sols;
    std::vector<vg::Perm3> perms;
    if (sigma.empty()) {
        const auto all = vg::Perm3::all();
        perms.assign(all.begin(), all.end());
    } else {
        perms.push_back(vg::parse_perm(sigma));
    }
    std::vector<int> ks = k ? std::vector<int>{*k} : std::vector<int>{0, 1};
    for (const vg::Perm3& s : perms)
        for (int kk : ks) {
            auto part = vg::solve_uniform(prog, s, kk);
            sols.insert(sols.end(), part.begin(), part.end());
        }
    std::sort(sols.begin(), sols.end());

    vg::json j = vg::json::array();
    std::ostringstream os;
    for (const auto& s : sols) {
        j.push_back(vg::to_json(s));
        os << s.element() << "  " << s.matrix() << '\n';
    }
    if (sols.empty()) os << "no solutions\n";
    print(cfg, j, os.str());
    return 0;
}

int run_centralizer(const Config& cfg, const std::string& ambient, std::uint64_t budget) {
    const vg::Modulus n(cfg.modulus);
    const vg::Ambient a = ambient == "m3"    ? vg::Ambient::M3
                          : ambient == "gl3" ? vg::Ambient::GL3
                          : ambient == "aff" ? vg::Ambient::AffMonoid
                                             : vg::Ambient::AffGroup;
    const vg::CentralizerReport rep = vg::centralizer(a, n, budget);
    std::ostringstream os;
    os << rep.size() << " elements\n";
    for (const auto& m : rep.matrices) os << m << '\n';
    for (const auto& f : rep.maps) os << f << '\n';
    print(cfg, vg::to_json(rep), os.str());
    return 0;
}

int run_center(const Config& cfg) {
    const vg::Modulus n(cfg.modulus);
    vg::json j = vg::json::array();
    std::ostringstream os;
    for (const auto& e : vg::center_of_J(n)) {
        j.push_back(vg::to_json(e));
        os << e << '\n';
    }
    print(cfg, j, os.str());
    return 0;
}

int run_count(const Config& cfg, const std::string& group, std::uint64_t budget) {
    const vg::Modulus n(cfg.modulus);
    const bool gl = group == "gl3";
    const std::uint64_t order = gl ? vg::count_GL3(n, budget) : vg::count_SL3(n, budget);
    const std::uint64_t index = vg::index_of_J(n, gl ? vg::LinearAmbient::GL3 : vg::LinearAmbient::SL3, budget);
    vg::json factors = vg::json::array();
    for (const auto& pp : n.prime_powers())
        factors.push_back({{"modulus", pp.value},
                           {"order", gl ? vg::count_GL3_prime_power(pp.value, budget)
                                        : vg::count_SL3_prime_power(pp.value, budget)}});
    const vg::json j{{"group", group}, {"modulus", n.value()}, {"order", order}, {"index_of_J", index}, {"factors", factors}};
    print(cfg, j, std::to_string(order) + "\n");
    return 0;
}

int run_orbit(const Config& cfg, const std::string& set, const std::string& element, const std::string& seed) {
    std::vector<vg::Vec3> tuples;
    if (!set.empty()) {
        if (cfg.modulus != 12) throw vg::ParseError("named triad orbits are defined over Z/12 only");
        tuples = set == "triads"  ? vg::triads()
                 : set == "major" ? vg::major_triads()
                 : set == "minor" ? vg::minor_triads()
                 : set == "root"  ? vg::root_position_triads()
                                  : vg::dual_root_position_triads();
    } else {
        if (element.empty() || seed.empty()) throw vg::ParseError("orbit needs --set, or --element with --seed");
        const vg::Modulus n(cfg.modulus);
        tuples = vg::orbit_of_element(vg::parse_element(element, n), vg::parse_vec(seed, n));
    }
    vg::json j = vg::json::array();
    std::ostringstream os;
    for (const auto& v : tuples) {
        j.push_back(vg::to_json(v));
        os << v << '\n';
    }
    print(cfg, j, os.str());
    return 0;
}

int run_hook(const Config& cfg, const std::string& direction, const std::string& element, const std::string& utt) {
    if (cfg.modulus != 12) throw vg::ParseError("the Hook group is defined over Z/12 only");
    if (direction == "to-utt") {
        if (element.empty()) throw vg::ParseError("hook to-utt needs --element");
        const vg::HookElement h(vg::parse_element(element, vg::triad_modulus));
        const vg::UTT u = vg::rho_inverse(h);
        const auto b = vg::hook_normal_form_B(h);
        const vg::json j{{"utt", u.to_string()}, {"element", vg::to_json(h.underlying())}, {"p", b.p}, {"n", b.n}};
        print(cfg, j, u.to_string() + "\n");
    } else {
        if (utt.empty()) throw vg::ParseError("hook from-utt needs --utt");
        const vg::UTT u = vg::parse_utt(utt);
        const vg::HookElement h = vg::rho(u);
        const auto b = vg::hook_normal_form_B(h);
        const vg::json j{{"utt", u.to_string()}, {"element", vg::to_json(h.underlying())}, {"p", b.p}, {"n", b.n}};
        print(cfg, j, element_block(h.underlying()));
    }
    return 0;
}

int run_rich(const Config& cfg, const std::string& seed) {
    const vg::Modulus n(cfg.modulus);
    const auto cycle = vg::orbit_of_element(vg::rich_element(n), vg::parse_vec(seed, n));
    vg::json j = vg::json::array();
    std::ostringstream os;
    for (const auto& v : cycle) {
        j.push_back(vg::to_json(v));
        os << v << '\n';
    }
    print(cfg, j, os.str());
    return 0;
}

int run_export(const Config& cfg, const std::string& input, const std::string& label, bool cyclic) {
    vg::Progression prog = vg::load_progression(input);
    if (cyclic) prog.cyclic = true;
    std::optional<std::vector<std::string>> labels;
    if (!label.empty()) {
        const vg::ExtElement g = vg::parse_element(label, prog.modulus);
        labels = std::vector<std::string>(prog.steps().size(), g.to_string());
    }
    const vg::Network net = vg::export_network(prog, labels);
    if (cfg.format == Format::json)
        std::cout << vg::to_json(net).dump(2) << '\n';
    else
        std::cout << vg::to_dot(net);
    return 0;
}

int run_duality(const Config& cfg, const std::string& seed) {
    const vg::Modulus n(cfg.modulus);
    const vg::DualityReport r = vg::check_duality(vg::parse_vec(seed, n));
    vg::json j{{"seed", vg::to_json(r.seed)},
               {"orbit_size", r.orbit_size},
               {"contextual_group", r.contextual == vg::ContextualGroup::U_UV ? "<U,UV>" : "<U,UW>"},
               {"simply_transitive_contextual", r.simply_transitive_contextual},
               {"simply_transitive_TI", r.simply_transitive_TI},
               {"mutually_commuting", r.mutually_commuting},
               {"is_dual_pair", r.is_dual_pair}};
    if (r.coinciding_power) j["coinciding_power"] = *r.coinciding_power;
    std::ostringstream os;
    os << (r.is_dual_pair ? "dual pair" : "not a dual pair") << " (orbit " << r.orbit_size << ")\n";
    if (r.coinciding_power)
        os << "generator and its power " << *r.coinciding_power << " agree on the orbit\n";
    print(cfg, j, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Voicing-transformation groups over Z/n"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};
    auto* mod_opt = app.add_option("--mod", cfg.modulus, "Modulus n (default 12)")->check(CLI::Range(2, 1 << 20));
    app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    std::string word, matrix, element, vec, input, sigma, ambient = "gl3", group, set, seed, direction, utt, label;
    std::optional<int> k;
    bool cyclic = false;
    std::uint64_t budget = vg::default_search_budget;

    auto* nf = app.add_subcommand("normal-form", "Normal form and matrix of an element");
    auto* nf_word = nf->add_option("--word", word, "Product of generators, e.g. VW");
    auto* nf_mat = nf->add_option("--matrix", matrix, "Row-major matrix, e.g. [[0,1,0],[1,0,0],[1,1,11]]");
    auto* nf_el = nf->add_option("--element", element, "Element text, e.g. \"(13) U (UW)^1\"");
    nf_word->excludes(nf_mat)->excludes(nf_el);
    nf_mat->excludes(nf_el);
    nf->require_option(1);

    auto* ap = app.add_subcommand("apply", "Apply an element to a voicing");
    ap->add_option("--element", element, "Element text")->required();
    ap->add_option("--vec", vec, "Voicing, e.g. (0,4,7)")->required();

    auto* so = app.add_subcommand("solve", "Uniform transformations realizing a progression");
    so->add_option("--input", input, "Progression JSON file")->required()->check(CLI::ExistingFile);
    so->add_option("--sigma", sigma, "Permutation, e.g. (12)");
    so->add_option("--k", k, "Power of U, 0 or 1")->check(CLI::Range(0, 1));
    so->add_flag("--cyclic", cyclic, "Include the step from last to first");

    auto* ce = app.add_subcommand("centralizer", "Centralizer of J");
    ce->add_option("--ambient", ambient, "m3, gl3, aff or affx")->check(CLI::IsMember({"m3", "gl3", "aff", "affx"}));
    ce->add_option("--budget", budget, "Candidate budget per prime-power factor");

    auto* cn = app.add_subcommand("center", "Center of J");

    auto* co = app.add_subcommand("count", "Brute-force order of GL(3) or SL(3)");
    co->add_option("group", group, "gl3 or sl3")->required()->check(CLI::IsMember({"gl3", "sl3"}));
    co->add_option("--budget", budget, "Candidate budget per prime-power factor");

    auto* ob = app.add_subcommand("orbit", "Named triad orbit, or the cycle of an element through a seed");
    ob->add_option("--set", set, "triads, major, minor, root or dual")
        ->check(CLI::IsMember({"triads", "major", "minor", "root", "dual"}));
    ob->add_option("--element", element, "Element text");
    ob->add_option("--seed", seed, "Seed voicing");

    auto* hk = app.add_subcommand("hook", "Convert between Hook-group elements and UTTs");
    hk->add_option("direction", direction, "to-utt or from-utt")->required()->check(CLI::IsMember({"to-utt", "from-utt"}));
    hk->add_option("--element", element, "Element text, e.g. \"(13)W\"");
    hk->add_option("--utt", utt, "UTT, e.g. \"<-,0,8>\"");

    auto* ri = app.add_subcommand("rich", "RICH cycle through a seed");
    ri->add_option("--seed", seed, "Seed voicing")->required();

    auto* ex = app.add_subcommand("export-dot", "Export a progression as a network");
    ex->add_option("--input", input, "Progression JSON file")->required()->check(CLI::ExistingFile);
    ex->add_option("--label", label, "Element labelling every edge");
    ex->add_flag("--cyclic", cyclic, "Include the step from last to first");

    auto* du = app.add_subcommand("duality", "Duality check against transpositions and inversions");
    du->add_option("--seed", seed, "Seed voicing")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (nf->parsed()) return run_normal_form(cfg, word, matrix, element);
        if (ap->parsed()) return run_apply(cfg, element, vec);
        if (so->parsed()) return run_solve(cfg, input, sigma, k, cyclic, mod_opt->count() > 0);
        if (ce->parsed()) return run_centralizer(cfg, ambient, budget);
        if (cn->parsed()) return run_center(cfg);
        if (co->parsed()) return run_count(cfg, group, budget);
        if (ob->parsed()) return run_orbit(cfg, set, element, seed);
        if (hk->parsed()) return run_hook(cfg, direction, element, utt);
        if (ri->parsed()) return run_rich(cfg, seed);
        if (ex->parsed()) return run_export(cfg, input, label, cyclic);
        if (du->parsed()) return run_duality(cfg, seed);
    } catch (const vg::NotInGroup& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const vg::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const vg::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
