// lmc: construct lifted multiplicity codes, encode data, simulate erasure
// repair over disjoint line groups, and run the verification batteries.
// Reports are JSON on stdout; progress lines go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lmc/codec.hpp"
#include "lmc/dualcheck.hpp"
#include "lmc/errors.hpp"
#include "lmc/gf.hpp"
#include "lmc/lifting.hpp"
#include "lmc/params.hpp"
#include "lmc/repair.hpp"
#include "lmc/verify.hpp"

using json = nlohmann::json;

namespace {

struct ParamArgs {
    int ell = 0;
    int ell_r = 0;
    int ell_s = -1;  // default: ell_r
};

void add_param_flags(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("--ell", args.ell, "field exponent: q = 2^ell")
        ->required();
    cmd->add_option("--ell-r", args.ell_r, "order exponent: r = 2^ell_r")
        ->required();
    cmd->add_option("--ell-s", args.ell_s,
                    "degree-shortfall exponent: s = 2^ell_s (default ell_r)");
}

lmc::CodeParams make_params(const ParamArgs& args) {
    return lmc::CodeParams::make(args.ell, args.ell_r,
                                 args.ell_s < 0 ? args.ell_r : args.ell_s);
}

json params_json(const lmc::CodeParams& p) {
    return json{{"ell", p.ell},
                {"ell_r", p.ell_r},
                {"ell_s", p.ell_s},
                {"q", p.q},
                {"r", p.r},
                {"s", p.s},
                {"d", p.d},
                {"t", p.t},
                {"symbol_width", p.symbol_width},
                {"length", p.length},
                {"alphabet_log2", p.symbol_width * p.ell},
                {"alphabet_size", "2^" + std::to_string(p.symbol_width * p.ell)}};
}

json bound_entry(const std::string& name, const std::string& source,
                 double value) {
    return json{{"name", name},
                {"source", source},
                {"value", value},
                {"vacuous", value < 0.0}};
}

json bounds_json(const lmc::CodeParams& p) {
    json bounds = json::array();
    bounds.push_back(bound_entry("good_count_lower_bound", "good-count-bound",
                                 lmc::good_count_lower_bound(p)));
    bounds.push_back(bound_entry("rate_lower_bound", "rate-bound",
                                 lmc::rate_lower_bound(p)));
    if (p.s == p.r) {
        bounds.push_back(bound_entry("redundancy_upper_bound",
                                     "redundancy-bound",
                                     lmc::redundancy_upper_bound(p)));
    }
    const auto [count, bound] = lmc::count_leq2_pairs(p.ell, p.ell_s);
    json pair = bound_entry("pair_count_bound", "carry-pair-bound", bound);
    pair["count"] = count;
    bounds.push_back(pair);
    return bounds;
}

lmc::ClassifyMode parse_mode(const std::string& mode) {
    if (mode == "oracle") return lmc::ClassifyMode::Oracle;
    if (mode == "fast") return lmc::ClassifyMode::Fast;
    throw CLI::ValidationError("--mode must be oracle or fast");
}

void guard_oracle_budget(const lmc::CodeParams& p) {
    const double checks = static_cast<double>(p.symbol_width) *
                          static_cast<double>(p.q) * p.q *
                          static_cast<double>(p.q) * p.q;
    if (checks > static_cast<double>(1ull << 30)) {
        throw lmc::Error(
            "oracle classification needs " + std::to_string(checks) +
            " line checks (over the 2^30 budget); use --mode fast");
    }
}

lmc::GoodSet load_good_set(const lmc::FieldContext& F,
                           const lmc::CodeParams& p, lmc::ClassifyMode mode) {
    if (mode == lmc::ClassifyMode::Oracle) guard_oracle_budget(p);
    return lmc::enumerate_good(F, p, mode);
}

lmc::Message random_message(const lmc::FieldContext& F, std::size_t n,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    lmc::Message msg;
    msg.coeffs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        msg.coeffs.push_back(
            lmc::FieldElem{static_cast<std::uint16_t>(rng() % F.order())});
    }
    return msg;
}

int cmd_params(const ParamArgs& args) {
    const lmc::CodeParams p = make_params(args);
    json report{{"command", "params"},
                {"params", params_json(p)},
                {"bounds", bounds_json(p)}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_good(const ParamArgs& args, const std::string& mode_str, bool list,
             bool with_dimension) {
    const lmc::CodeParams p = make_params(args);
    const lmc::FieldContext F(p.ell);
    const lmc::ClassifyMode mode = parse_mode(mode_str);
    const auto t0 = std::chrono::steady_clock::now();
    const lmc::GoodSet gs = load_good_set(F, p, mode);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const double measured_rate =
        static_cast<double>(gs.size()) /
        (static_cast<double>(p.symbol_width) * p.length);
    json report{{"command", "good"},
                {"params", params_json(p)},
                {"mode", mode_str},
                {"count", gs.size()},
                {"measured_rate", measured_rate},
                {"bounds", bounds_json(p)},
                {"seconds", secs}};
    if (with_dimension) {
        report["dimension"] = lmc::code_dimension_exact(F, p);
    }
    if (list) {
        json mons = json::array();
        for (const auto& m : gs.monomials) mons.push_back({m.a, m.b});
        report["monomials"] = std::move(mons);
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_encode(const ParamArgs& args, const std::string& mode_str,
               const std::string& msg_path, bool use_random,
               std::uint64_t seed, const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    const lmc::CodeParams p = make_params(args);
    const lmc::FieldContext F(p.ell);
    const lmc::GoodSet gs = load_good_set(F, p, parse_mode(mode_str));
    lmc::Message msg;
    json prng;
    if (use_random) {
        msg = random_message(F, gs.size(), seed);
        prng = json{{"name", "mt19937_64"}, {"seed", seed}};
    } else {
        msg = lmc::read_message(msg_path, F);
        if (msg.coeffs.size() != gs.size()) {
            throw lmc::Error("message has " +
                             std::to_string(msg.coeffs.size()) +
                             " elements; this code needs " +
                             std::to_string(gs.size()));
        }
    }
    const lmc::Codeword cw = lmc::encode(F, msg, gs, p);
    lmc::write_codeword(out_path, p, cw);
    json report{{"command", "encode"},  {"params", params_json(p)},
                {"mode", mode_str},     {"message_length", gs.size()},
                {"output", out_path},
                {"seconds",
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count()}};
    if (!prng.is_null()) report["prng"] = prng;
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_decode(const std::string& in_path, const std::string& mode_str,
               const std::string& out_path) {
    const lmc::CodewordFile file = lmc::read_codeword(in_path);
    const lmc::CodeParams& p = file.params;
    const lmc::FieldContext F(p.ell);
    const lmc::GoodSet gs = load_good_set(F, p, parse_mode(mode_str));
    const lmc::Message msg = lmc::recover_message(F, file.codeword, gs, p);
    lmc::write_message(out_path, F, msg);
    json report{{"command", "decode"},
                {"params", params_json(p)},
                {"mode", mode_str},
                {"message_length", msg.coeffs.size()},
                {"output", out_path}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

lmc::PointSet parse_erasures(const lmc::FieldContext& F,
                             const lmc::CodeParams& p,
                             const std::vector<std::string>& specs,
                             int random_count, std::uint64_t seed,
                             json& prng_out) {
    lmc::PointSet out;
    for (const auto& spec : specs) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos) {
            throw lmc::Error("erasure must be x,y; got '" + spec + "'");
        }
        const long x = std::stol(spec.substr(0, comma));
        const long y = std::stol(spec.substr(comma + 1));
        if (x < 0 || x >= p.q || y < 0 || y >= p.q) {
            throw lmc::Error("erasure point out of range: " + spec);
        }
        const lmc::Point pt{F.elem(static_cast<std::uint32_t>(x)),
                            F.elem(static_cast<std::uint32_t>(y))};
        if (!out.insert(pt).second) {
            throw lmc::Error("duplicate erasure point: " + spec);
        }
    }
    if (random_count > 0) {
        if (random_count > p.length) {
            throw lmc::Error("cannot erase more points than the code length");
        }
        std::mt19937_64 rng(seed);
        prng_out = json{{"name", "mt19937_64"}, {"seed", seed}};
        while (static_cast<int>(out.size()) < random_count) {
            const auto v = rng() % static_cast<std::uint64_t>(p.length);
            out.insert(lmc::Point{
                F.elem(static_cast<std::uint32_t>(v) / p.q),
                F.elem(static_cast<std::uint32_t>(v) % p.q)});
        }
    }
    return out;
}

int cmd_repair(const std::string& in_path, const std::string& out_path,
               const std::vector<std::string>& erase_specs, int random_count,
               std::uint64_t seed, bool cross_check) {
    const auto t0 = std::chrono::steady_clock::now();
    const lmc::CodewordFile file = lmc::read_codeword(in_path);
    const lmc::CodeParams& p = file.params;
    const lmc::FieldContext F(p.ell);
    json prng;
    const lmc::PointSet erased =
        parse_erasures(F, p, erase_specs, random_count, seed, prng);

    json repairs = json::array();
    lmc::Codeword cw = file.codeword;
    if (static_cast<int>(erased.size()) > p.t - 1) {
        throw lmc::TooManyErasures(
            "got " + std::to_string(erased.size()) +
            " erasures; at most t-1 = " + std::to_string(p.t - 1) +
            " are repairable");
    }
    lmc::PointSet remaining = erased;
    while (!remaining.empty()) {
        const lmc::Point pt = *remaining.begin();
        const lmc::RepairPlan plan = lmc::make_repair_plan(F, pt, p);
        lmc::PointSet others = remaining;
        others.erase(pt);
        int used_group = -1;
        lmc::Symbol recovered;
        json agreement = json::array();
        for (std::size_t g = 0; g < plan.groups.size(); ++g) {
            bool blocked = false;
            for (const auto& line : plan.groups[g].lines) {
                for (const auto& other : others) {
                    if (other.y ==
                        F.add(F.mul(line.alpha, other.x), line.beta)) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) break;
            }
            if (blocked) {
                agreement.push_back("blocked");
                continue;
            }
            const lmc::Symbol sym =
                lmc::recover_symbol(F, cw, others, pt, plan.groups[g], p);
            if (used_group < 0) {
                used_group = static_cast<int>(g);
                recovered = sym;
                agreement.push_back("used");
                if (!cross_check) break;
            } else if (!(sym == recovered)) {
                throw lmc::NotACodeword(
                    "repair groups disagree at point (" +
                    std::to_string(pt.x.value) + ", " +
                    std::to_string(pt.y.value) +
                    "); the input is not a valid codeword");
            } else {
                agreement.push_back("agree");
            }
        }
        if (used_group < 0) {
            throw lmc::NoCleanGroup("no clean group at point (" +
                                    std::to_string(pt.x.value) + ", " +
                                    std::to_string(pt.y.value) + ")");
        }
        cw.symbols[lmc::point_index(pt.x, pt.y, p)] = recovered;
        json entry{{"point", {pt.x.value, pt.y.value}},
                   {"group_index", used_group}};
        if (cross_check) entry["groups"] = agreement;
        repairs.push_back(std::move(entry));
        remaining.erase(pt);
    }
    lmc::write_codeword(out_path, p, cw);

    json erased_json = json::array();
    for (const auto& ptv : erased) {
        erased_json.push_back({ptv.x.value, ptv.y.value});
    }
    json report{{"command", "repair"},   {"params", params_json(p)},
                {"erased", erased_json}, {"repairs", repairs},
                {"cross_check", cross_check}, {"output", out_path},
                {"seconds",
                 std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count()}};
    if (!prng.is_null()) report["prng"] = prng;
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<lmc::CheckResult> results;
    if (suite == "all") {
        results = lmc::run_all_suites();
    } else {
        results = lmc::run_suite(suite);
    }
    bool all_pass = true;
    std::string first_failure;
    json checks = json::array();
    for (const auto& res : results) {
        std::cerr << (res.pass ? "ok   " : "FAIL ") << res.suite << "/"
                  << res.name << "  (" << res.seconds << "s)\n";
        if (!res.pass && first_failure.empty()) {
            first_failure = res.suite + "/" + res.name;
        }
        all_pass = all_pass && res.pass;
        checks.push_back(json{{"suite", res.suite},
                              {"name", res.name},
                              {"pass", res.pass},
                              {"detail", res.detail},
                              {"seconds", res.seconds}});
    }
    json report{{"command", "verify"},
                {"suite", suite},
                {"checks", checks},
                {"all_pass", all_pass}};
    std::cout << report.dump(2) << "\n";
    if (!all_pass) {
        std::cerr << "first failing property: " << first_failure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "bivariate lifted multiplicity codes: construction, encoding, and "
        "erasure repair via disjoint line groups"};
    app.require_subcommand(1);

    ParamArgs params_args;
    CLI::App* params_cmd =
        app.add_subcommand("params", "derived parameters and bounds");
    add_param_flags(params_cmd, params_args);

    ParamArgs good_args;
    std::string good_mode = "oracle";
    bool good_list = false;
    bool good_dimension = false;
    CLI::App* good_cmd =
        app.add_subcommand("good", "enumerate good monomials");
    add_param_flags(good_cmd, good_args);
    good_cmd->add_option("--mode", good_mode, "oracle|fast (default oracle)");
    good_cmd->add_flag("--list", good_list, "include the monomial list");
    good_cmd->add_flag("--dimension", good_dimension,
                       "also compute the exact code dimension (q <= 16)");

    ParamArgs enc_args;
    std::string enc_mode = "oracle";
    std::string enc_msg;
    std::uint64_t enc_seed = 1;
    bool enc_random = false;
    std::string enc_out;
    CLI::App* enc_cmd = app.add_subcommand("encode", "encode a message file");
    add_param_flags(enc_cmd, enc_args);
    enc_cmd->add_option("--mode", enc_mode, "good-set classifier");
    CLI::Option* msg_opt =
        enc_cmd->add_option("--msg", enc_msg, "message file to encode");
    CLI::Option* rand_opt = enc_cmd->add_flag(
        "--random", enc_random, "encode a seeded random message");
    enc_cmd->add_option("--seed", enc_seed, "seed for --random (default 1)");
    enc_cmd->add_option("--out", enc_out, "output codeword file")->required();
    msg_opt->excludes(rand_opt);

    std::string dec_in, dec_out, dec_mode = "oracle";
    CLI::App* dec_cmd =
        app.add_subcommand("decode", "recover the message from a codeword");
    dec_cmd->add_option("--in", dec_in, "codeword file")->required();
    dec_cmd->add_option("--mode", dec_mode, "good-set classifier");
    dec_cmd->add_option("--out", dec_out, "output message file")->required();

    std::string rep_in, rep_out;
    std::vector<std::string> rep_points;
    int rep_random = 0;
    std::uint64_t rep_seed = 1;
    bool rep_cross = false;
    CLI::App* rep_cmd =
        app.add_subcommand("repair", "repair erased symbols in a codeword");
    rep_cmd->add_option("--in", rep_in, "codeword file")->required();
    rep_cmd->add_option("--out", rep_out, "repaired codeword file")->required();
    rep_cmd->add_option("--erase", rep_points,
                        "erased point as x,y (repeatable)");
    rep_cmd->add_option("--erase-random", rep_random,
                        "erase this many seeded random points");
    rep_cmd->add_option("--seed", rep_seed, "seed for --erase-random");
    rep_cmd->add_flag("--cross-check", rep_cross,
                      "recover from every clean group and compare");

    std::string verify_suite = "all";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the property batteries");
    verify_cmd->add_option(
        "--suite", verify_suite,
        "all|field|poly|lifting|codec|repair|dual (default all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (params_cmd->parsed()) return cmd_params(params_args);
        if (good_cmd->parsed()) {
            return cmd_good(good_args, good_mode, good_list, good_dimension);
        }
        if (enc_cmd->parsed()) {
            if (!enc_random && enc_msg.empty()) {
                throw lmc::Error("encode needs --msg FILE or --random");
            }
            return cmd_encode(enc_args, enc_mode, enc_msg, enc_random,
                              enc_seed, enc_out);
        }
        if (dec_cmd->parsed()) return cmd_decode(dec_in, dec_mode, dec_out);
        if (rep_cmd->parsed()) {
            return cmd_repair(rep_in, rep_out, rep_points, rep_random,
                              rep_seed, rep_cross);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_suite);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
