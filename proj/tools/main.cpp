#include <cohit/divided.hpp>
#include <cohit/hitbasis.hpp>
#include <cohit/invariants.hpp>
#include <cohit/lambda.hpp>
#include <cohit/preimage.hpp>
#include <cohit/text.hpp>
#include <cohit/transfer.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cohit;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, empty = 1, usage = 2, internal = 3 };

struct Common {
    int k = 0;
    int d = 0;
    unsigned jobs = 1;
    std::string cache_dir = ".cohit-cache";
    std::string format = "text";
};

// "@path" reads the argument from a file.
std::string slurp(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParallelFor pool(unsigned jobs) { return jobs > 1 ? thread_pool_for(jobs) : ParallelFor(serial_for); }

HitBasis basis_for(const Common& c) {
    auto out = load_or_build(c.k, c.d, c.cache_dir, pool(c.jobs));
    if (!out.warning.empty()) std::cerr << "warning: " << out.warning << "\n";
    if (!out.path.empty()) std::cerr << (out.from_cache ? "loaded " : "wrote ") << out.path << "\n";
    return std::move(out.basis);
}

int cmd_basis(const Common& c) {
    auto b = basis_for(c);
    auto [zero, plus] = zero_plus_split(b);
    std::string cache = c.cache_dir.empty() ? "" : c.cache_dir + "/" + cache_file_name(c.k, c.d);
    if (c.format == "json") {
        ordered_json j;
        j["k"] = c.k;
        j["d"] = c.d;
        j["monomials"] = b.ordered.size();
        j["dimension"] = b.admissible.size();
        j["zero"] = zero.size();
        j["plus"] = plus.size();
        auto adm = ordered_json::array();
        for (const auto& m : b.admissible) adm.push_back(format_tuple(m));
        j["admissible"] = adm;
        j["cache"] = cache.empty() ? ordered_json(nullptr) : ordered_json(cache);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k = " << c.k << ", d = " << c.d << "\n"
                  << "monomials: " << b.ordered.size() << "\n"
                  << "dimension: " << b.admissible.size() << " (zero " << zero.size() << ", plus " << plus.size()
                  << ")\n";
        if (!cache.empty()) std::cout << "cache: " << cache << "\n";
        for (std::size_t i = 0; i < b.admissible.size(); ++i)
            std::cout << "  a_" << (i + 1) << " = " << format_tuple(b.admissible[i]) << "\n";
    }
    return b.admissible.empty() ? empty : ok;
}

int cmd_invariants(const Common& c, const std::string& report) {
    auto b = basis_for(c);
    auto r = global_glk_invariants(b, pool(c.jobs));
    const auto& cert = r.certificate;
    if (c.format == "json") {
        std::cout << certificate_json(r) << "\n";
    } else if (report == "text") {
        std::cout << text_report(r, b);
    } else {
        for (const auto& a : r.strata) {
            std::cout << "weight " << format_weight(a.stratum.omega) << ": " << a.stratum.basis.size()
                      << " monomials, components";
            for (const auto& comp : a.components) std::cout << " " << comp.members.size();
            std::cout << "; sigma " << a.sigma_invariants.size() << ", local GL " << a.glk.invariants.size() << "\n";
        }
        std::cout << "case: " << to_string(cert.case_tag);
        if (cert.main_weight) std::cout << ", main weight " << format_weight(*cert.main_weight);
        std::cout << "\n";
        if (cert.h_prime)
            std::cout << "h' terms: " << cert.h_prime->size() << " (system " << cert.correction_rows << " x "
                      << cert.correction_cols << ")\n";
        std::cout << "global sigma basis: " << cert.global_sigma_basis.size() << "\n"
                  << "dimension: " << cert.invariant_basis.size() << "\n";
        for (std::size_t i = 0; i < cert.invariant_basis.size(); ++i)
            std::cout << "  g_" << (i + 1) << " = " << format_poly(cert.invariant_basis[i]) << "\n";
    }
    for (const auto& w : cert.warnings) std::cerr << "warning: " << w << "\n";
    if (!cert.warnings.empty()) return internal;
    return cert.invariant_basis.empty() ? empty : ok;
}

struct PreimageArgs {
    int k = 0;
    std::string input;
    std::string variant = "chon-ha";
    int max_z_terms = 2;
    std::uint64_t kernel_cap = std::uint64_t{1} << 20;
    bool all = false;
    bool z_nonneg = false;
    bool allow_non_cocycle = false;
    std::string format = "text";
};

int cmd_preimage(const PreimageArgs& a) {
    auto y = parse_lambda(slurp(a.input));
    for (const auto& w : y)
        if (static_cast<int>(w.size()) != a.k) throw std::invalid_argument("target words must have length --k");
    auto p = make_problem(a.k, y, parse_variant(a.variant));
    p.max_z_terms = a.max_z_terms;
    p.kernel_cap = a.kernel_cap;
    p.all = a.all;
    p.widen_z = a.z_nonneg;
    p.require_cocycle = !a.allow_non_cocycle;
    PreimageResult r;
    try {
        r = find_preimages(p, [](std::uint64_t n) { std::cerr << "\r" << n << " candidates" << std::flush; });
    } catch (const NotCocycleError& e) {
        std::cerr << e.what() << "\n";
        if (a.format == "json") {
            ordered_json j;
            j["status"] = "not_cocycle";
            j["k"] = a.k;
            j["delta_y"] = format_lambda(e.delta());
            std::cout << j.dump(2) << "\n";
        }
        return empty;
    }
    if (a.format == "json") {
        std::cout << certificate_json(p, r) << "\n";
    } else {
        std::cout << "status: " << to_string(r.status) << "\n"
                  << "candidates checked: " << r.candidates_checked << "\n";
        for (std::size_t i = 0; i < r.solutions.size(); ++i) {
            const auto& s = r.solutions[i];
            std::cout << "solution " << (i + 1) << " (" << s.x.size() << " terms in x)\n"
                      << "  x = " << format_divided(s.x) << "\n"
                      << "  z = " << format_lambda(s.z) << "\n"
                      << "  phi(x) + d(z) = " << format_lambda(s.certificate) << "\n";
        }
    }
    for (const auto& s : r.solutions)
        if (!verify_solution(a.k, s.x, s.z, y, p.variant) || !is_A_annihilated(s.x)) return internal;
    return r.status == SearchStatus::found ? ok : empty;
}

int cmd_transfer(int k, const std::string& input, const std::string& variant, const std::string& format) {
    auto x = parse_divided(slurp(input));
    for (const auto& m : x)
        if (static_cast<int>(m.size()) != k) throw std::invalid_argument("monomials must have length --k");
    auto v = parse_variant(variant);
    auto t0 = std::chrono::steady_clock::now();
    auto raw = transfer_poly(x, v);
    auto reduced = adem_reduce(raw);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["variant"] = to_string(v);
        j["unreduced"] = format_lambda(raw);
        j["reduced"] = format_lambda(reduced);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Final unreduced result: varphi_" << k << "(sample) = " << format_lambda_names(raw) << "\n"
                  << "Final reduced result: varphi_" << k << "(sample) = " << format_lambda_names(reduced) << "\n"
                  << "terms: " << raw.size() << " unreduced, " << reduced.size() << " reduced\n";
    }
    std::cerr << "time: " << secs << " s\n";
    return reduced.is_zero() ? empty : ok;
}

int cmd_lambda(const std::string& op, const std::string& input, const std::string& order, bool raw) {
    auto p = parse_lambda(slurp(input));
    LambdaPoly out;
    if (op == "reduce") {
        out = adem_reduce(p);
    } else {
        auto o = order == "reversed" ? DifferentialOrder::reversed : DifferentialOrder::matched;
        out = differential(p, o);
        if (!raw) out = adem_reduce(out);
    }
    std::cout << format_lambda(out) << "\n";
    return ok;
}

int cmd_pair(const std::string& x, const std::string& f) {
    std::cout << pairing(parse_divided(slurp(x)), parse_poly(slurp(f))) << "\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohit: lambda algebra transfer, preimages, and cohit invariants over F2"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--k", common.k, "number of variables")->required()->check(CLI::Range(1, 16));
        s->add_option("--d", common.d, "degree")->required()->check(CLI::NonNegativeNumber);
        s->add_option("--jobs", common.jobs, "worker threads")->check(CLI::Range(1u, 256u));
        s->add_option("--cache-dir", common.cache_dir, "cache directory (empty disables)");
        s->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* basis = app.add_subcommand("basis", "admissible monomial basis of (QP_k)_d");
    add_common(basis);

    std::string report = "summary";
    auto* inv = app.add_subcommand("invariants", "Sigma_k- and GL_k-invariants of (QP_k)_d");
    add_common(inv);
    inv->add_option("--report", report, "summary or full text report")->check(CLI::IsMember({"summary", "text"}));

    PreimageArgs pa;
    auto* pre = app.add_subcommand("preimage", "solve phi_k(x) + d(z) = y with x A-annihilated");
    pre->add_option("--k", pa.k)->required()->check(CLI::Range(1, 16));
    pre->add_option("--input", pa.input, "target y as lambda tuples, or @file")->required();
    pre->add_option("--variant", pa.variant)->check(CLI::IsMember({"chon-ha", "sum"}));
    pre->add_option("--max-z-terms", pa.max_z_terms)->check(CLI::NonNegativeNumber);
    pre->add_option("--kernel-cap", pa.kernel_cap);
    pre->add_flag("--all", pa.all, "collect every verified solution");
    pre->add_flag("--z-nonneg", pa.z_nonneg, "allow lambda_0 in z");
    pre->add_flag("--allow-non-cocycle", pa.allow_non_cocycle, "search even when d(y) != 0");
    pre->add_option("--format", pa.format)->check(CLI::IsMember({"text", "json"}));

    int tk = 0;
    std::string tin, tvar = "chon-ha", tfmt = "text";
    auto* tr = app.add_subcommand("transfer", "chain-level transfer of divided-power monomials");
    tr->add_option("--k", tk)->required()->check(CLI::Range(1, 16));
    tr->add_option("--input", tin, "tuples (i_1,...,i_k) joined by +, or @file")->required();
    tr->add_option("--variant", tvar)->check(CLI::IsMember({"chon-ha", "sum"}));
    tr->add_option("--format", tfmt)->check(CLI::IsMember({"text", "json"}));

    std::string lop, lin, lorder = "matched";
    bool lraw = false;
    auto* lam = app.add_subcommand("lambda", "Adem reduction and differential");
    lam->add_option("op", lop)->required()->check(CLI::IsMember({"reduce", "diff"}));
    lam->add_option("--input", lin)->required();
    lam->add_option("--differential", lorder)->check(CLI::IsMember({"matched", "reversed"}));
    lam->add_flag("--raw", lraw, "do not reduce the differential");

    std::string px, pf;
    auto* pair = app.add_subcommand("pair", "dual pairing <x, f>");
    pair->add_option("--x", px, "divided-power polynomial")->required();
    pair->add_option("--f", pf, "polynomial")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? ok : usage;
    }

    try {
        if (*basis) return cmd_basis(common);
        if (*inv) return cmd_invariants(common, report);
        if (*pre) return cmd_preimage(pa);
        if (*tr) return cmd_transfer(tk, tin, tvar, tfmt);
        if (*lam) return cmd_lambda(lop, lin, lorder, lraw);
        if (*pair) return cmd_pair(px, pf);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}
