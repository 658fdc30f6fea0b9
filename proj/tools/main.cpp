// Command-line front end: gen / analyze / verify.
//
// Exit codes: 0 success (all checks pass), 1 verification failure,
// 2 invalid input.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qadic/adic.hpp"
#include "qadic/constructions.hpp"
#include "qadic/correlation.hpp"
#include "qadic/gf2seq.hpp"
#include "qadic/numtheory.hpp"
#include "qadic/seqio.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qadic;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;

struct GenOptions {
    std::string family;
    std::optional<std::uint64_t> p;
    std::optional<unsigned> n;
    std::string poly;
    std::string input;
    std::string output;
};

struct AnalyzeOptions {
    std::string input;
    bool profile = false;
    bool balance = false;
    bool complexity = false;
};

struct VerifyOptions {
    std::string family;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> n;
    std::string sweep;
    unsigned jobs = 1;
    std::string format = "json";
    bool lemmas = false;
    std::uint64_t max_p = 199;
};

std::pair<std::uint64_t, std::uint64_t> parse_sweep(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("sweep must have the form LO..HI");
    std::size_t used = 0;
    std::uint64_t lo, hi;
    try {
        lo = std::stoull(text.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument("");
        const std::string rest = text.substr(sep + 2);
        hi = std::stoull(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("sweep must have the form LO..HI");
    }
    if (lo > hi)
        throw std::invalid_argument("invalid sweep bounds: " + std::to_string(lo) +
                                    " > " + std::to_string(hi));
    return {lo, hi};
}

int run_gen(const GenOptions& opt) {
    const Family family = family_from_name(opt.family);
    QuaternarySequence seq;
    ordered_json payload;

    switch (family) {
        case Family::g1:
        case Family::g2: {
            if (!opt.p)
                throw std::invalid_argument("--p is required for " + opt.family);
            if (!opt.poly.empty() || !opt.input.empty() || opt.n)
                throw std::invalid_argument("--n/--poly/--in only apply to g3");
            const OddPrime p(*opt.p);
            seq = (family == Family::g1) ? build_g1(p) : build_g2(p);
            payload["family"] = opt.family;
            payload["param"] = *opt.p;
            break;
        }
        case Family::g3: {
            BinarySequence base;
            if (!opt.input.empty()) {
                if (opt.n || !opt.poly.empty())
                    throw std::invalid_argument("--in excludes --n and --poly");
                base = read_binary_file(opt.input);
                payload["source"] = opt.input;
            } else {
                if (!opt.n && opt.poly.empty())
                    throw std::invalid_argument("--n or --in is required for g3");
                const Gf2Poly poly = opt.poly.empty() ? first_primitive_poly(*opt.n)
                                                      : Gf2Poly::parse(opt.poly);
                if (opt.n && poly.degree() != *opt.n)
                    throw std::invalid_argument("--poly degree does not match --n");
                base = msequence(poly);
                payload["poly"] = poly.exponent_list();
            }
            seq = build_g3(base);
            payload["family"] = opt.family;
            payload["param"] = seq.param;
            break;
        }
        case Family::external:
            throw std::invalid_argument("family must be one of g1, g2, g3");
    }

    payload["period"] = seq.period();
    if (!opt.output.empty()) {
        write_sequence_file(opt.output, seq);
        payload["path"] = opt.output;
    } else {
        payload["digits"] = digits_string(seq);
    }
    std::cout << payload.dump(2) << "\n";
    return kExitPass;
}

int run_analyze(const AnalyzeOptions& opt) {
    const QuaternarySequence seq = read_quaternary_file(opt.input);
    const bool all = !(opt.profile || opt.balance || opt.complexity);

    ordered_json payload;
    payload["path"] = opt.input;
    payload["period"] = seq.period();
    if (all || opt.profile) {
        const AutocorrProfile prof = full_profile(seq);
        ordered_json section = ordered_json::parse(to_json_string(prof));
        section["ideal"] = is_ideal_quaternary(prof);
        payload["profile"] = std::move(section);
    }
    if (all || opt.balance) {
        const BalanceResult bal = is_balanced(seq.digits, 4);
        payload["balance"] = {{"balanced", bal.balanced}, {"counts", bal.counts}};
    }
    if (all || opt.complexity) {
        payload["complexity"] =
            ordered_json::parse(to_json_string(complexity_report(seq)));
    }
    std::cout << payload.dump(2) << "\n";
    return kExitPass;
}

ordered_json verify_row_json(const VerifyResult& r) {
    return {{"family", family_name(r.family)},
            {"param", r.param},
            {"period", r.period},
            {"predicted_gcd", r.predicted_gcd.get_str()},
            {"computed_gcd", r.computed_gcd.get_str()},
            {"gcd_minus", r.gcd_minus.get_str()},
            {"gcd_plus", r.gcd_plus.get_str()},
            {"branch", r.branch},
            {"pass", r.pass}};
}

int run_verify_lemmas(const VerifyOptions& opt) {
    if (opt.max_p < 3)
        throw std::invalid_argument("--max-p must be at least 3");
    struct Row {
        std::uint64_t p;
        bool l2, l3, l4, pass;
    };
    std::vector<Row> rows;
    for (std::uint64_t p = 3; p <= opt.max_p; p += 2) {
        if (!is_prime(p)) continue;
        const OddPrime op(p);
        const bool l2 = check_lemma2(op).holds;
        const bool l3 = check_lemma3(p);
        const bool l4 = check_lemma4(op).holds;
        rows.push_back({p, l2, l3, l4, l2 && l3 && l4});
    }
    const bool all_pass =
        std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });

    if (opt.format == "csv") {
        std::cout << "param,lemma2,lemma3,lemma4,pass\n";
        for (const Row& r : rows)
            std::cout << r.p << ',' << (r.l2 ? "true" : "false") << ','
                      << (r.l3 ? "true" : "false") << ',' << (r.l4 ? "true" : "false")
                      << ',' << (r.pass ? "true" : "false") << "\n";
    } else {
        ordered_json payload;
        payload["mode"] = "lemmas";
        payload["max_p"] = opt.max_p;
        auto& jrows = payload["rows"] = ordered_json::array();
        for (const Row& r : rows)
            jrows.push_back({{"param", r.p},
                             {"lemma2", r.l2},
                             {"lemma3", r.l3},
                             {"lemma4", r.l4},
                             {"pass", r.pass}});
        payload["all_pass"] = all_pass;
        std::cout << payload.dump(2) << "\n";
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

int run_verify(const VerifyOptions& opt) {
    if (opt.lemmas) return run_verify_lemmas(opt);
    if (opt.family.empty())
        throw std::invalid_argument("--family is required (or use --lemmas)");
    const Family family = family_from_name(opt.family);
    if (family == Family::external)
        throw std::invalid_argument("family must be one of g1, g2, g3");

    // Parameter points, ascending.
    std::vector<std::uint64_t> params;
    if (!opt.sweep.empty()) {
        const auto [lo, hi] = parse_sweep(opt.sweep);
        if (family == Family::g3) {
            if (lo < 2)
                throw std::invalid_argument("g3 sweep requires n >= 2");
            for (std::uint64_t n = lo; n <= hi; ++n) params.push_back(n);
        } else {
            const std::uint64_t want = (family == Family::g1) ? 1 : 3;
            for (std::uint64_t p = lo | 1; p <= hi; p += 2)
                if (p % 4 == want && is_prime(p) && p > 2) params.push_back(p);
        }
        if (params.empty())
            throw std::invalid_argument("sweep contains no valid parameters");
    } else if (family == Family::g3) {
        if (!opt.n) throw std::invalid_argument("--n or --sweep is required for g3");
        params.push_back(*opt.n);
    } else {
        if (!opt.p)
            throw std::invalid_argument("--p or --sweep is required for " + opt.family);
        params.push_back(*opt.p);
    }

    // Row i depends only on params[i]; --jobs never changes the output.
    std::vector<VerifyResult> rows(params.size());
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || params.size() <= 1) {
        for (std::size_t i = 0; i < params.size(); ++i)
            rows[i] = verify_theorem(family, params[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < params.size();)
                    rows[i] = verify_theorem(family, params[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        const std::size_t count = std::min<std::size_t>(jobs, params.size());
        pool.reserve(count);
        for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    const bool all_pass = std::all_of(rows.begin(), rows.end(),
                                      [](const VerifyResult& r) { return r.pass; });

    if (opt.format == "csv") {
        std::cout << "family,param,period,predicted_gcd,computed_gcd,pass\n";
        for (const VerifyResult& r : rows)
            std::cout << family_name(r.family) << ',' << r.param << ',' << r.period
                      << ',' << r.predicted_gcd.get_str() << ','
                      << r.computed_gcd.get_str() << ',' << (r.pass ? "true" : "false")
                      << "\n";
    } else {
        ordered_json payload;
        payload["family"] = opt.family;
        auto& jrows = payload["rows"] = ordered_json::array();
        for (const VerifyResult& r : rows) jrows.push_back(verify_row_json(r));
        payload["all_pass"] = all_pass;
        std::cout << payload.dump(2) << "\n";
    }
    return all_pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced quaternary sequences with ideal autocorrelation: "
                 "construction, exact analysis, 4-adic complexity"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "construct a sequence and emit its digits");
    gen->add_option("--family", gen_opt.family, "g1, g2 or g3")
        ->required()
        ->check(CLI::IsMember({"g1", "g2", "g3"}));
    gen->add_option("--p", gen_opt.p, "odd prime (g1: p=1 mod 4, g2: p=3 mod 4)");
    gen->add_option("--n", gen_opt.n, "m-sequence degree for g3 (period 2^n-1)");
    gen->add_option("--poly", gen_opt.poly,
                    "primitive polynomial exponents for g3, e.g. 4,1,0");
    gen->add_option("--in", gen_opt.input,
                    "binary sequence file to use as the g3 base");
    gen->add_option("--out", gen_opt.output,
                    "write the digit file here (omitted: digits go in the payload)");

    AnalyzeOptions an_opt;
    auto* analyze = app.add_subcommand("analyze", "exact analysis of a digit file");
    analyze->add_option("input", an_opt.input, "sequence file")->required();
    analyze->add_flag("--profile", an_opt.profile, "autocorrelation profile");
    analyze->add_flag("--balance", an_opt.balance, "symbol balance");
    analyze->add_flag("--complexity", an_opt.complexity, "4-adic complexity report");

    VerifyOptions ver_opt;
    auto* verify = app.add_subcommand(
        "verify", "computed gcd vs closed-form prediction, or lemma identities");
    verify->add_option("--family", ver_opt.family, "g1, g2 or g3");
    verify->add_option("--p", ver_opt.p, "single prime parameter");
    verify->add_option("--n", ver_opt.n, "single g3 degree parameter");
    verify->add_option("--sweep", ver_opt.sweep,
                       "inclusive parameter range LO..HI (primes of the right "
                       "residue class for g1/g2, degrees for g3)");
    verify->add_option("--jobs", ver_opt.jobs, "worker threads (output-invariant)")
        ->default_val(1);
    verify->add_option("--format", ver_opt.format, "json or csv")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--lemmas", ver_opt.lemmas, "check the lemma identities");
    verify->add_option("--max-p", ver_opt.max_p, "lemma sweep bound")
        ->default_val(199);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInvalid;
    }

    try {
        if (gen->parsed()) return run_gen(gen_opt);
        if (analyze->parsed()) return run_analyze(an_opt);
        if (verify->parsed()) return run_verify(ver_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
