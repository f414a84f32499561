#include "oddgray/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddgray/assembly.hpp"
#include "oddgray/factor.hpp"
#include "oddgray/verify.hpp"

namespace oddgray {

namespace {

using json = nlohmann::ordered_json;

// Domain-level argument error; maps to exit code 2.
struct BadArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json members_json(const FlippableTuple& t) {
    json members = json::array();
    for (const auto& m : t.members()) members.push_back({{"word", m.word.to_string()}, {"mark", m.mark}});
    return members;
}

void check_k(int k, int lo, int hi, const std::string& command, int ceiling) {
    if (k < lo || k > hi) {
        throw BadArgument(command + ": k must lie in " + std::to_string(lo) + ".." +
                          std::to_string(hi));
    }
    if (k > ceiling) {
        throw BadArgument(command + ": k = " + std::to_string(k) + " exceeds the resource ceiling " +
                          std::to_string(ceiling) + " (set by defaults or ODDGRAY_MAX_K)");
    }
}

std::optional<std::uint64_t> parse_family(const std::string& text, int k) {
    if (text.empty()) return std::nullopt;
    std::uint64_t mask = 0;
    try {
        std::size_t used = 0;
        mask = std::stoull(text, &used, 0);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw BadArgument("--family: not an unsigned integer: " + text);
    }
    if (k < 6) throw BadArgument("--family requires k >= 6");
    const std::uint64_t bits = family_bits(k);
    if (bits < 64 && (mask >> bits) != 0) {
        throw BadArgument("--family: mask must be below 2^" + std::to_string(bits) + " for k = " +
                          std::to_string(k));
    }
    return mask;
}

std::string subset_text(const Bitstring& x) {
    std::string s = "{";
    bool first = true;
    for (int i : to_subset(x)) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

// The one position set in neither of two disjoint k-subsets of [2k+1].
int unflipped_position(const Bitstring& a, const Bitstring& b) {
    const std::uint64_t rest = ~(a.bits() | b.bits()) & low_mask(a.length());
    return std::countr_zero(rest) + 1;
}

void emit(const CycleCertificate& c, const std::string& format, std::ostream& out) {
    const auto& vs = c.vertices;
    std::string line;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (format == "bits") {
            line = vs[i].to_string();
        } else if (format == "subsets") {
            line = subset_text(vs[i]);
        } else {
            line = std::to_string(unflipped_position(vs[i], vs[(i + 1) % vs.size()]));
        }
        line += '\n';
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
}

std::vector<Bitstring> read_bits(std::istream& in, VerificationReport& report) {
    std::vector<Bitstring> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(Bitstring::parse(line));
        } catch (const std::exception&) {
            report.fail("parse", "line " + std::to_string(number) + ": " + line);
        }
    }
    return out;
}

struct Suite {
    std::string name;
    std::function<VerificationReport()> check;
};

std::vector<Suite> selfcheck_suites(int max_k) {
    std::vector<Suite> suites;
    auto range = [](int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); };
    const int factor_k = std::min(max_k, kFactorCheckMaxK);
    if (factor_k >= 1) {
        suites.push_back({"factor k=" + range(1, factor_k), [factor_k] {
                              VerificationReport r;
                              for (int k = 1; k <= factor_k; ++k) r.merge(verify_factor(k));
                              return r;
                          }});
        suites.push_back({"pi k=" + range(1, factor_k), [factor_k] {
                              VerificationReport r;
                              for (int k = 1; k <= factor_k; ++k) r.merge(verify_pi_properties(k));
                              return r;
                          }});
        const int sum = std::min(max_k, 8);
        suites.push_back({"pi-concatenation sum<=" + std::to_string(sum),
                          [sum] { return verify_pi_concatenation(sum); }});
    }
    suites.push_back({"base-witnesses", [] { return verify_base_witnesses(); }});
    const int psi_k = std::min(max_k, kPsiCheckMaxK);
    if (psi_k >= 3) {
        suites.push_back({"psi k=" + range(3, psi_k), [psi_k] {
                              VerificationReport r;
                              for (int k = 3; k <= psi_k; ++k) r.merge(verify_psi(k));
                              return r;
                          }});
    }
    const int tree_k = std::min(max_k, kTreeCheckMaxK);
    if (tree_k >= 3) {
        suites.push_back({"tree k=" + range(3, tree_k), [tree_k] {
                              VerificationReport r;
                              for (int k = 3; k <= tree_k; ++k) r.merge(verify_tree(k));
                              return r;
                          }});
    }
    for (int k = 6; k <= std::min(tree_k, 7); ++k) {
        suites.push_back({"counting-trees k=" + std::to_string(k), [k] {
                              VerificationReport r;
                              const std::uint64_t n = std::uint64_t{1} << family_bits(k);
                              for (std::uint64_t f = 0; f < n; ++f) r.merge(verify_tree(k, f));
                              return r;
                          }});
    }
    const int cert_k = std::min(max_k, kCertificateCheckMaxK);
    if (cert_k >= 3) {
        suites.push_back({"odd-certificates k=" + range(3, cert_k), [cert_k] {
                              VerificationReport r;
                              for (int k = 3; k <= cert_k; ++k) r.merge(verify_certificate(hamilton_odd(k)));
                              return r;
                          }});
    }
    suites.push_back({"middle-certificates k=" + range(1, cert_k), [cert_k] {
                          VerificationReport r;
                          for (int k = 1; k <= cert_k; ++k) {
                              r.merge(verify_certificate(hamilton_middle_levels(k)));
                          }
                          return r;
                      }});
    suites.push_back({"brute-force", [max_k] {
                          VerificationReport r;
                          if (brute_force_hamilton(2, Target::OddGraph)) r.fail("petersen", "cycle found");
                          for (int k = 1; k <= std::min(max_k, 2); ++k) {
                              auto c = brute_force_hamilton(k, Target::MiddleLevels);
                              if (!c) r.fail("middle", "no cycle for k=" + std::to_string(k));
                          }
                          if (max_k >= 3) {
                              auto c = brute_force_hamilton(3, Target::OddGraph);
                              if (!c) {
                                  r.fail("odd", "no cycle for k=3");
                              } else {
                                  r.merge(verify_certificate({3, Target::OddGraph, *c}));
                              }
                          }
                          return r;
                      }});
    return suites;
}

}  // namespace

int resource_ceiling(int fallback) {
    if (const char* env = std::getenv("ODDGRAY_MAX_K")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return std::min<long>(fallback, v);
    }
    return fallback;
}

std::string tuple_json(const FlippableTuple& t) { return json{{"members", members_json(t)}}.dump(); }

std::string tree_json(int k, std::optional<std::uint64_t> family, const SpanningTree& tree) {
    json doc;
    doc["k"] = k;
    doc["family"] = family ? json(*family) : json(nullptr);
    json x = json::array();
    for (const DyckWord& w : tree.base) x.push_back(w.to_string());
    doc["X"] = std::move(x);
    json tuples = json::array();
    for (const DerivedTuple& t : tree.tuples) {
        json witness = json::array();
        for (const Bitstring& y : t.derivation.witness()) witness.push_back(y.to_string());
        tuples.push_back({{"members", members_json(t.tuple)},
                          {"derivation",
                           {{"pattern", t.derivation.pattern.name()},
                            {"u", t.derivation.context.u.to_string()},
                            {"v", t.derivation.context.v.to_string()}}},
                          {"witness", std::move(witness)}});
    }
    doc["tuples"] = std::move(tuples);
    return doc.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hamilton cycles in odd graphs and middle levels graphs"};
    app.require_subcommand(1);

    int k = 0;
    std::string format = "bits";
    std::string family_text;
    std::string input;
    std::string target_name;
    std::string emit_format = "json";
    int max_k = 6;
    int bench_max_k = 10;

    auto* gen = app.add_subcommand("gen", "Hamilton cycle of the odd graph O_k");
    gen->add_option("--k", k, "semilength, 3..30")->required();
    gen->add_option("--format", format, "bits | subsets | delta")
        ->check(CLI::IsMember({"bits", "subsets", "delta"}));
    gen->add_option("--family", family_text, "counting-tree mask (k >= 6)");

    auto* middle = app.add_subcommand("middle", "Hamilton cycle of the middle levels graph");
    middle->add_option("--k", k, "semilength, 1..30")->required();
    middle->add_option("--format", format, "bits | subsets")
        ->check(CLI::IsMember({"bits", "subsets"}));
    middle->add_option("--family", family_text, "counting-tree mask (k >= 6)");

    auto* fac = app.add_subcommand("factor", "cycle factor C_k, one cycle per line");
    fac->add_option("--k", k, "semilength")->required();

    auto* tree = app.add_subcommand("tree", "spanning tree of flippable tuples");
    tree->add_option("--k", k, "semilength, >= 3")->required();
    tree->add_option("--family", family_text, "counting-tree mask (k >= 6)");
    tree->add_option("--emit", emit_format, "json")->check(CLI::IsMember({"json"}));

    auto* ver = app.add_subcommand("verify", "check a certificate in bits format");
    ver->add_option("--k", k, "semilength")->required();
    ver->add_option("--input", input, "certificate file, - for stdin")->required();
    ver->add_option("--target", target_name, "odd | gplus | middle")
        ->required()
        ->check(CLI::IsMember({"odd", "gplus", "middle"}));

    auto* self = app.add_subcommand("selfcheck", "run all verification suites");
    self->add_option("--max-k", max_k, "largest k to check")->check(CLI::Range(1, 30));

    auto* bench = app.add_subcommand("bench", "generation throughput");
    bench->add_option("--max-k", bench_max_k, "largest k to time")->check(CLI::Range(3, 30));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (k == 2) {
                throw BadArgument(
                    "gen: O_2 is the Petersen graph K(5,2), which has no Hamilton cycle");
            }
            check_k(k, 3, kMaxSemilength, "gen", resource_ceiling(kDefaultGenMaxK));
            emit(hamilton_odd(k, parse_family(family_text, k)), format, out);
        } else if (middle->parsed()) {
            check_k(k, 1, kMaxSemilength, "middle", resource_ceiling(kDefaultGenMaxK));
            const auto family = parse_family(family_text, k);
            emit(hamilton_middle_levels(k, family), format, out);
        } else if (fac->parsed()) {
            check_k(k, 1, kMaxSemilength, "factor", resource_ceiling(kDefaultFactorMaxK));
            for (const DyckWord& x : enumerate_dyck(k)) {
                const FactorPath p = path(x);
                std::string line;
                for (std::size_t i = 0; i < p.vertices.size(); ++i) {
                    if (i > 0) line += ',';
                    line += p.vertices[i].to_string();
                }
                out << line << '\n';
            }
        } else if (tree->parsed()) {
            check_k(k, 3, kMaxSemilength, "tree", resource_ceiling(kDefaultTreeMaxK));
            const auto family = parse_family(family_text, k);
            TreeBuilder builder;
            const SpanningTree t = family ? builder.counting_tree(k, *family) : builder.T(k);
            out << tree_json(k, family, t) << '\n';
        } else if (ver->parsed()) {
            check_k(k, 1, kMaxSemilength, "verify", kMaxSemilength);
            VerificationReport report;
            CycleCertificate c{k, parse_target(target_name), {}};
            if (input == "-") {
                c.vertices = read_bits(std::cin, report);
            } else {
                std::ifstream file(input);
                if (!file) throw BadArgument("verify: cannot open " + input);
                c.vertices = read_bits(file, report);
            }
            report.merge(verify_certificate(c));
            if (report.passed()) {
                out << "PASS " << c.vertices.size() << " vertices\n";
                return 0;
            }
            out << "FAIL " << report.summary() << '\n';
            return 1;
        } else if (self->parsed()) {
            const int cap = resource_ceiling(max_k);
            bool all = true;
            for (const Suite& s : selfcheck_suites(cap)) {
                const auto t0 = std::chrono::steady_clock::now();
                const VerificationReport r = s.check();
                const double secs =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                all = all && r.passed();
                out << (r.passed() ? "PASS " : "FAIL ") << s.name;
                if (!r.passed()) out << ": " << r.summary();
                out << " (" << std::fixed << std::setprecision(2) << secs << "s)\n" << std::flush;
            }
            return all ? 0 : 1;
        } else if (bench->parsed()) {
            const int top = std::min(bench_max_k, resource_ceiling(kDefaultGenMaxK));
            out << "k,vertices,seconds,vertices_per_second\n";
            for (int kk = 3; kk <= top; ++kk) {
                const auto t0 = std::chrono::steady_clock::now();
                std::ostringstream sink;
                emit(hamilton_odd(kk), "bits", sink);
                const double secs =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                const std::uint64_t n = binomial(2 * kk + 1, kk);
                out << kk << ',' << n << ',' << std::setprecision(4) << secs << ','
                    << static_cast<std::uint64_t>(static_cast<double>(n) / std::max(secs, 1e-9))
                    << '\n'
                    << std::flush;
            }
        }
    } catch (const BadArgument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace oddgray
