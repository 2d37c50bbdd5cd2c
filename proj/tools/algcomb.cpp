// algcomb: command-line front end for the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
// JSON goes to stdout (or --output) with sorted keys and 12 significant
// digits; wall-clock runtime is printed to stderr so that repeated runs give
// byte-identical files.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "algcomb/apolar.hpp"
#include "algcomb/diagcoinv.hpp"
#include "algcomb/errors.hpp"
#include "algcomb/hall.hpp"
#include "algcomb/horn.hpp"
#include "algcomb/lis.hpp"
#include "algcomb/parallel.hpp"
#include "algcomb/symfunc.hpp"
#include "algcomb/tracywidom.hpp"
#include "algcomb/verify.hpp"

using json = nlohmann::json;
using namespace algcomb;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResourceCap = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::string command_line;
    std::string format = "json";
    std::string output;
    int threads = 0;
    json meta_extra = json::object();
};

Context ctx;

json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::stod(buf);
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json big(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json rational(const mpq_class& q) {
    if (q.get_den() == 1) return big(q.get_num());
    return q.get_str();
}

std::string key(const Partition& p) { return p.to_string(); }
std::string key(const Bidegree& b) { return std::to_string(b.first) + "," + std::to_string(b.second); }

json meta() {
    json m = ctx.meta_extra;
    m["command"] = ctx.command_line;
    m["version"] = kVersion;
    return m;
}

std::ostream& out_stream() {
    static std::ofstream file;
    if (ctx.output.empty()) return std::cout;
    if (!file.is_open()) {
        file.open(ctx.output);
        if (!file) throw UsageError("cannot open output file " + ctx.output);
    }
    return file;
}

void emit_json(json body) {
    body["meta"] = meta();
    out_stream() << body.dump(2) << '\n';
}

void emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns) {
    std::ostream& os = out_stream();
    const json m = meta();
    for (auto it = m.begin(); it != m.end(); ++it) os << "# " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << fmt12(columns[c][r]);
        os << '\n';
    }
}

bool csv() { return ctx.format == "csv"; }

void require_json(const char* command) {
    if (csv()) throw UsageError(std::string(command) + " has no CSV output; use --out json");
}

Partition partition_arg(const std::string& text, const char* flag) {
    try {
        return parse_partition(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--") + flag + ": " + e.what());
    }
}

std::vector<int> int_list(const std::string& text, const char* flag) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(std::string("--") + flag + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    return v;
}

json expansion_json(const SchurExpansion& e) {
    json j = json::object();
    for (const auto& [lambda, c] : e) j[key(lambda)] = rational(c);
    return j;
}

json multiplicities_json(const std::map<Bidegree, std::map<Partition, long>>& mult) {
    json j = json::object();
    for (const auto& [bd, m] : mult) {
        json row = json::object();
        for (const auto& [lambda, k] : m) row[key(lambda)] = k;
        j[key(bd)] = row;
    }
    return j;
}

json dims_json(const std::map<Bidegree, long>& dims) {
    json j = json::object();
    for (const auto& [bd, d] : dims) j[key(bd)] = d;
    return j;
}

std::vector<double> read_csv_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<double> v;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::string field = line.substr(0, line.find(','));
        try {
            std::size_t used = 0;
            const double x = std::stod(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            v.push_back(x);
        } catch (const std::exception&) {
            if (header_seen || !v.empty()) throw UsageError(path + ": bad value '" + field + "'");
            header_seen = true;
        }
    }
    if (v.empty()) throw UsageError(path + ": no samples");
    return v;
}

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double variance_of(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size());
}

// Polynomials such as "(x+y)^2" or "x1*y2 - 3*x2^2": integers, variable
// names (a letter then digits), + - * ^ and parentheses.
class PolyParser {
public:
    explicit PolyParser(std::string text) : text_(std::move(text)) {
        for (std::size_t i = 0; i < text_.size();) {
            if (std::isalpha(static_cast<unsigned char>(text_[i]))) {
                std::size_t j = i + 1;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                const std::string name = text_.substr(i, j - i);
                if (std::find(names_.begin(), names_.end(), name) == names_.end()) names_.push_back(name);
                i = j;
            } else {
                ++i;
            }
        }
        if (names_.empty() || static_cast<int>(names_.size()) > kMaxVars)
            throw UsageError("--poly: need between 1 and " + std::to_string(kMaxVars) + " variables");
    }

    const std::vector<std::string>& names() const { return names_; }

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("--poly: " + why + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    int n() const { return static_cast<int>(names_.size()); }
    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 9) fail("expected a small integer");
        return std::stol(text_.substr(start, pos_ - start));
    }
    MultiPoly expr() {
        MultiPoly p = term();
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }
    MultiPoly term() {
        MultiPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }
    MultiPoly factor() {
        if (eat('-')) return -factor();
        MultiPoly b = base();
        if (eat('^')) {
            const long e = integer();
            if (e > 40) fail("exponent too large");
            b = pow(b, static_cast<int>(e));
        }
        return b;
    }
    MultiPoly base() {
        skip();
        if (eat('(')) {
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) return MultiPoly::constant(n(), integer());
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t j = pos_ + 1;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            const std::string name = text_.substr(pos_, j - pos_);
            pos_ = j;
            const auto it = std::find(names_.begin(), names_.end(), name);
            return MultiPoly::variable(n(), static_cast<int>(it - names_.begin()));
        }
        fail("expected a number, variable or '('");
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::vector<std::string> names_;
};

json tableau_json(const StandardTableau& t) {
    json rows = json::array();
    for (const auto& r : t.rows()) rows.push_back(r);
    return rows;
}

StandardTableau tableau_arg(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, '/')) rows.push_back(int_list(row, "tableau"));
    try {
        return StandardTableau(std::move(rows));
    } catch (const std::exception& e) {
        throw UsageError(std::string("--tableau: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) ctx.command_line += (i ? " " : "") + std::string(i ? argv[i] : "algcomb");

    CLI::App app{"Algebraic combinatorics experiments: LR coefficients, Horn inequalities, Hall polynomials, "
                 "coinvariants, longest increasing subsequences and Tracy-Widom."};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--out", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("-o,--output", ctx.output, "Write to this file instead of stdout");
    app.add_option("--threads", ctx.threads, "Worker threads (default: ALGCOMB_THREADS or all cores)")->check(CLI::PositiveNumber);
    int exit_code = kOk;
    std::function<void()> action;

    // lr
    std::string mu_s, nu_s, lambda_s;
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
    lr->add_option("--mu", mu_s)->required();
    lr->add_option("--nu", nu_s)->required();
    lr->add_option("--lambda", lambda_s)->required();
    lr->callback([&] {
        action = [&] {
            require_json("lr");
            const Partition mu = partition_arg(mu_s, "mu"), nu = partition_arg(nu_s, "nu"), lambda = partition_arg(lambda_s, "lambda");
            emit_json({{"c", big(lr_coefficient(mu, nu, lambda))}, {"mu", key(mu)}, {"nu", key(nu)}, {"lambda", key(lambda)}});
        };
    });

    // schur-expand
    auto* se = app.add_subcommand("schur-expand", "Schur expansion of s_mu * s_nu, checked against the LR rule");
    se->add_option("--mu", mu_s)->required();
    se->add_option("--nu", nu_s)->required();
    se->callback([&] {
        action = [&] {
            require_json("schur-expand");
            const Partition mu = partition_arg(mu_s, "mu"), nu = partition_arg(nu_s, "nu");
            const SchurExpansion e = schur_product_expansion(mu, nu);
            bool agree = true;
            for (const auto& lambda : enumerate_partitions(mu.size() + nu.size())) {
                auto it = e.find(lambda);
                agree = agree && (it == e.end() ? mpq_class(0) : it->second) == lr_coefficient(mu, nu, lambda);
            }
            emit_json({{"expansion", expansion_json(e)}, {"lr_agreement", agree}});
            if (!agree) exit_code = kVerifyFailed;
        };
    });


    // syt
    std::string syt_lambda;
    int syt_n = 0, syt_maj = -1;
    auto* syt = app.add_subcommand("syt", "Standard Young tableaux: f^lambda by hooks and by listing, or all SYT of n with a given MAJ");
    auto* syt_shape = syt->add_option("--lambda", syt_lambda, "Shape to count");
    auto* syt_size = syt->add_option("--n", syt_n, "Entries, with --maj")->check(CLI::Range(1, 9));
    syt->add_option("--maj", syt_maj, "Major index, with --n")->needs(syt_size);
    syt_shape->excludes(syt_size);
    syt->callback([&] {
        action = [&] {
            require_json("syt");
            if (!syt_lambda.empty()) {
                const Partition lambda = partition_arg(syt_lambda, "lambda");
                if (lambda.size() > 12) throw ResourceCapError("syt: listing is limited to |lambda| <= 12");
                json list = json::array();
                json maj = json::object();
                for (const auto& t : enumerate_syt(lambda)) {
                    list.push_back(tableau_json(t));
                    const std::string k = std::to_string(major_index(t));
                    maj[k] = maj.value(k, 0) + 1;
                }
                emit_json({{"lambda", key(lambda)}, {"count", big(count_syt(lambda))}, {"tableaux", list}, {"maj_distribution", maj}});
                return;
            }
            if (syt_n == 0 || syt_maj < 0) throw UsageError("syt: give --lambda, or --n with --maj");
            json found = json::array();
            for (const auto& lambda : enumerate_partitions(syt_n))
                for (const auto& t : enumerate_syt(lambda))
                    if (major_index(t) == syt_maj) found.push_back({{"shape", key(lambda)}, {"rows", tableau_json(t)}});
            emit_json({{"n", syt_n}, {"maj", syt_maj}, {"count", found.size()}, {"tableaux", found}});
        };
    });

    // maj
    std::string tableau_s;
    auto* maj = app.add_subcommand("maj", "Major index of a standard tableau given as rows, e.g. 1,2,6/3,5/4,7");
    maj->add_option("--tableau", tableau_s)->required();
    maj->callback([&] {
        action = [&] {
            require_json("maj");
            const StandardTableau t = tableau_arg(tableau_s);
            json descents = json::array();
            for (int i = 1; i < t.size(); ++i)
                if (t.row_of(i + 1) > t.row_of(i)) descents.push_back(i);
            emit_json({{"shape", key(t.shape())}, {"maj", major_index(t)}, {"descents", descents}});
        };
    });

    // dspan
    std::string poly_s;
    int x_vars = 0;
    auto* dspan = app.add_subcommand("dspan", "Dimension of the span of a polynomial and all its partial derivatives");
    dspan->add_option("--poly", poly_s, "Polynomial, e.g. \"(x+y)^2\"")->required();
    dspan->add_option("--x-vars", x_vars, "First k variables (by first appearance) form the x set; default all");
    dspan->callback([&] {
        action = [&] {
            require_json("dspan");
            PolyParser parser(poly_s);
            const MultiPoly p = parser.parse();
            const int n = static_cast<int>(parser.names().size());
            if (x_vars < 0 || x_vars > n) throw UsageError("dspan: --x-vars must be between 0 and the number of variables");
            if (p.is_zero()) throw UsageError("dspan: polynomial is zero");
            const GradedSpan span = derivative_span(p, x_vars == 0 ? n : x_vars);
            std::map<Bidegree, long> dims;
            for (const auto& [bd, d] : span.dimensions()) dims[bd] = static_cast<long>(d);
            emit_json({{"variables", parser.names()}, {"dim", static_cast<long>(span.dimension())},
                       {"hilbert_series", span.hilbert_series()}, {"bigraded_dims", dims_json(dims)}});
        };
    });

    // saturation
    int bound = 6, m_max = 4;
    auto* sat = app.add_subcommand("saturation", "Saturation scan: c != 0 <=> c(m mu, m nu, m lambda) != 0");
    sat->add_option("--bound", bound, "Largest |lambda|")->check(CLI::Range(0, 10));
    sat->add_option("--m-max", m_max, "Largest scaling factor")->check(CLI::Range(1, 8));
    sat->callback([&] {
        action = [&] {
            require_json("saturation");
            const SaturationReport r = saturation_scan(bound, m_max);
            json violations = json::array();
            for (const auto& v : r.violations)
                violations.push_back({{"mu", key(v.mu)}, {"nu", key(v.nu)}, {"lambda", key(v.lambda)}, {"m", v.m},
                                      {"c", big(v.c)}, {"c_scaled", big(v.c_scaled)}});
            emit_json({{"bound", bound}, {"m_max", m_max}, {"triples_checked", r.triples_checked},
                       {"nonzero_triples", r.nonzero_triples}, {"violations", violations}});
            if (!r.violations.empty()) exit_code = kVerifyFailed;
        };
    });

    // horn
    int horn_n = 3;
    std::string alpha_s, beta_s, gamma_s;
    auto* horn = app.add_subcommand("horn", "Horn inequalities for (alpha, beta, gamma) vs LR nonvanishing");
    horn->add_option("--n", horn_n)->check(CLI::Range(2, 3));
    horn->add_option("--alpha", alpha_s)->required();
    horn->add_option("--beta", beta_s)->required();
    horn->add_option("--gamma", gamma_s)->required();
    horn->callback([&] {
        action = [&] {
            require_json("horn");
            const Partition a = partition_arg(alpha_s, "alpha"), b = partition_arg(beta_s, "beta"), g = partition_arg(gamma_s, "gamma");
            if (a.length() > horn_n || b.length() > horn_n || g.length() > horn_n)
                throw UsageError("horn: partitions must have at most --n parts");
            const SpectrumTriple t = SpectrumTriple::from_partitions(a, b, g, horn_n);
            const bool feasible = horn_feasible(t);
            json violated = json::array();
            for (const auto& ineq : horn_system(horn_n).inequalities) {
                const SpectrumTriple& s = t;
                mpq_class lhs = 0, rhs = 0;
                for (int k : ineq.K) lhs += s.gamma[k - 1];
                for (int i : ineq.I) rhs += s.alpha[i - 1];
                for (int j : ineq.J) rhs += s.beta[j - 1];
                if (lhs > rhs) violated.push_back(ineq.to_string());
            }
            const mpz_class c = lr_coefficient(a, b, g);
            emit_json({{"n", horn_n}, {"horn_feasible", feasible}, {"lr_coefficient", big(c)}, {"agree", feasible == (c != 0)},
                       {"trace_equal", a.size() + b.size() == g.size()}, {"violated", violated},
                       {"inequality_count", horn_system(horn_n).inequalities.size()}});
            if (feasible != (c != 0)) exit_code = kVerifyFailed;
        };
    });

    // hall
    std::string primes_s = "2,3,5,7";
    long group_cap = kDefaultGroupCap;
    auto* hall = app.add_subcommand("hall", "Hall polynomial g^lambda_{mu,nu}(t) from subgroup counts and the Hall algebra");
    hall->add_option("--lambda", lambda_s)->required();
    hall->add_option("--mu", mu_s)->required();
    hall->add_option("--nu", nu_s)->required();
    hall->add_option("--primes", primes_s, "Primes for subgroup counting");
    hall->add_option("--group-cap", group_cap, "Largest group order enumerated")->check(CLI::PositiveNumber);
    hall->callback([&] {
        action = [&] {
            require_json("hall");
            const Partition lambda = partition_arg(lambda_s, "lambda"), mu = partition_arg(mu_s, "mu"), nu = partition_arg(nu_s, "nu");
            const std::vector<int> primes = int_list(primes_s, "primes");
            // Primes whose group fits under the cap; the algebraic route has no cap.
            std::vector<int> usable;
            for (int p : primes)
                if (std::pow(static_cast<double>(p), lambda.size()) <= static_cast<double>(group_cap)) usable.push_back(p);
            json counts = json::object();
            for (int p : usable) counts[std::to_string(p)] = hall_count(lambda, mu, nu, p, group_cap);
            const HallPolynomialResult alg = hall_polynomial_algebraic(lambda, mu, nu);
            json body{{"counts", counts}, {"lr_coefficient", big(lr_coefficient(mu, nu, lambda))}};
            auto coefs = [](const IntPolynomial& g) {
                json c = json::array();
                for (const auto& v : g.coefficients()) c.push_back(big(v));
                return c;
            };
            body["polynomial"] = coefs(alg.polynomial);
            body["shifted"] = coefs(shift_by_one(alg.polynomial));
            body["positivity"] = maley_positivity(alg.polynomial);
            bool agree = true;
            for (int p : usable) agree = agree && alg.polynomial.evaluate(p) == hall_count(lambda, mu, nu, p, group_cap);
            if (usable.size() >= 2) {
                const HallPolynomialResult interp = hall_polynomial(lambda, mu, nu, usable, group_cap);
                body["interpolated"] = coefs(interp.polynomial);
                agree = agree && interp.polynomial == alg.polynomial;
            }
            body["agree"] = agree;
            emit_json(body);
            if (!agree) exit_code = kVerifyFailed;
        };
    });

    // nfact
    auto* nfact = app.add_subcommand("nfact", "Garsia-Haiman module dD_mu: dimension, bigraded dimensions, multiplicities");
    nfact->add_option("--mu", mu_s)->required();
    int nfact_cap = 5;
    nfact->add_option("--n-cap", nfact_cap, "Largest |mu| accepted (6 takes minutes)")->check(CLI::Range(1, 6));
    nfact->callback([&] {
        action = [&] {
            require_json("nfact");
            const Partition mu = partition_arg(mu_s, "mu");
            if (mu.size() < 1) throw UsageError("nfact: mu must be nonempty");
            if (mu.size() > nfact_cap) throw ResourceCapError("nfact: |mu| = " + std::to_string(mu.size()) + " exceeds --n-cap");
            ctx.meta_extra["n_cap"] = nfact_cap;
            const GradedSpan span = derivative_span(gh_determinant(mu), mu.size());
            const auto mult = irreducible_multiplicities(graded_character(span, mu.size()));
            std::map<Bidegree, long> dims;
            for (const auto& [bd, d] : span.dimensions()) dims[bd] = static_cast<long>(d);
            emit_json({{"mu", key(mu)}, {"dim", static_cast<long>(span.dimension())}, {"bigraded_dims", dims_json(dims)},
                       {"multiplicities", multiplicities_json(mult)}});
        };
    });

    // coinv
    int coinv_n = 4, coinv_cap = 6;
    auto* coinv = app.add_subcommand("coinv", "Harmonics dV_n: dimension, Hilbert series, MAJ multiplicities");
    coinv->add_option("--n", coinv_n)->required()->check(CLI::Range(1, 9));
    coinv->add_option("--n-cap", coinv_cap, "Largest n accepted")->check(CLI::Range(1, 9));
    coinv->callback([&] {
        action = [&] {
            require_json("coinv");
            if (coinv_n > coinv_cap) throw ResourceCapError("coinv: n exceeds --n-cap");
            ctx.meta_extra["n_cap"] = coinv_cap;
            const GradedSpan span = derivative_span(vandermonde(coinv_n));
            json body{{"n", coinv_n}, {"dim", static_cast<long>(span.dimension())}, {"hilbert_series", span.hilbert_series()}};
            bool maj_ok = true;
            if (coinv_n <= 5) {
                const auto mult = irreducible_multiplicities(graded_character(span, coinv_n));
                json by_degree = json::object();
                for (const auto& [bd, m] : mult) {
                    json row = json::object();
                    for (const auto& [lambda, k] : m) row[key(lambda)] = k;
                    by_degree[std::to_string(bd.first)] = row;
                }
                for (const auto& lambda : enumerate_partitions(coinv_n))
                    for (int i = 0; i <= coinv_n * (coinv_n - 1) / 2; ++i) {
                        auto it = mult.find({i, 0});
                        const long m = it != mult.end() && it->second.count(lambda) ? it->second.at(lambda) : 0;
                        maj_ok = maj_ok && m == maj_multiplicity(lambda, i);
                    }
                body["multiplicities"] = by_degree;
                body["maj_check"] = maj_ok;
            }
            body["factorial_check"] = span.dimension() == factorial(coinv_n);
            emit_json(body);
            if (!maj_ok || span.dimension() != factorial(coinv_n)) exit_code = kVerifyFailed;
        };
    });

    // diag
    int diag_n = 3, diag_cap = kDiagonalDefaultCap;
    long pair_budget = GroebnerOptions{}.pair_budget;
    auto* diag = app.add_subcommand("diag", "Diagonal coinvariants R(2): bigraded dimensions and antiinvariants");
    diag->add_option("--n", diag_n)->required()->check(CLI::Range(1, 6));
    diag->add_option("--n-cap", diag_cap, "Largest n attempted (4 takes seconds)")->check(CLI::Range(1, 6));
    diag->add_option("--pair-budget", pair_budget, "S-pair budget for the Groebner basis")->check(CLI::PositiveNumber);
    diag->callback([&] {
        action = [&] {
            require_json("diag");
            ctx.meta_extra["n_cap"] = diag_cap;
            ctx.meta_extra["pair_budget"] = pair_budget;
            GroebnerOptions options;
            options.pair_budget = pair_budget;
            const CoinvariantQuotient q = diagonal_coinvariants(diag_n, MonomialOrder::Grevlex, options, diag_cap);
            const AntiinvariantDimensions gamma = antiinvariant_dimensions(quotient_character(q));
            const mpz_class parking = count_parking_functions(diag_n);
            const bool catalan_ok = catalan(diag_n) == gamma.total;
            const bool parking_ok = parking == q.basis.total();
            emit_json({{"n", diag_n}, {"total", q.basis.total()}, {"bigraded_dims", dims_json(q.basis.dimensions())},
                       {"gamma_dims", dims_json(gamma.by_bidegree)}, {"gamma_total", gamma.total},
                       {"catalan_check", catalan_ok}, {"parking_check", parking_ok}});
            if (!catalan_ok || !parking_ok) exit_code = kVerifyFailed;
        };
    });

    // lis
    auto* lis = app.add_subcommand("lis", "Longest increasing subsequences");
    lis->require_subcommand(1);
    int lis_n = 20, lis_k = 3, lis_max_n = 20;
    long samples = 1000;
    std::uint64_t seed = 42;
    auto* expect = lis->add_subcommand("expect", "Exact E(n) from the hook-length sum");
    expect->add_option("--n", lis_n)->required()->check(CLI::Range(1, 60));
    expect->callback([&] {
        action = [&] {
            require_json("lis expect");
            const mpq_class e = expected_is_exact(lis_n);
            const double root = std::sqrt(static_cast<double>(lis_n));
            emit_json({{"n", lis_n}, {"expected", rational(e)}, {"expected_decimal", num(e.get_d())},
                       {"scaled", num((e.get_d() - 2 * root) / std::pow(lis_n, 1.0 / 6.0))}});
        };
    });
    auto* uk = lis->add_subcommand("uk", "u_k(n) from the Gessel determinant");
    uk->add_option("--k", lis_k)->required()->check(CLI::Range(1, 12));
    uk->add_option("--max-n", lis_max_n)->check(CLI::Range(0, 60));
    uk->callback([&] {
        action = [&] {
            require_json("lis uk");
            const GesselResult g = gessel_series(lis_k, 2 * lis_max_n);
            json counts = json::array();
            for (const auto& c : g.counts) counts.push_back(big(c));
            json body{{"k", lis_k}, {"max_n", lis_max_n}, {"counts", counts}};
            if (lis_k == 3) {
                bool closed_ok = true;
                for (int n = 0; n <= lis_max_n; ++n) closed_ok = closed_ok && u3_closed_form(n) == mpq_class(g.counts[n]);
                body["closed_form_check"] = closed_ok;
                if (!closed_ok) exit_code = kVerifyFailed;
            }
            emit_json(body);
        };
    });
    std::string word_s;
    auto* word = lis->add_subcommand("word", "is_n, Greene shape and RSK tableaux of one permutation");
    word->add_option("--word", word_s, "One-line notation, e.g. 247951368 or 2,4,7,9,5,1,3,6,8")->required();
    word->callback([&] {
        action = [&] {
            require_json("lis word");
            Permutation w;
            try {
                w = word_s.find(',') == std::string::npos ? Permutation::from_digits(word_s) : Permutation(int_list(word_s, "word"));
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--word: ") + e.what());
            }
            const auto [p, q] = rsk(w);
            const Partition shape = p.shape();
            json body{{"is", is_length(w)}, {"greene_shape", shape.parts()}, {"P", tableau_json(p)}, {"Q", tableau_json(q)}};
            if (w.size() <= 10) {
                json partial = json::array();
                for (int k = 1; k <= shape.length(); ++k) partial.push_back(greene_bruteforce(w, k));
                body["greene_bruteforce"] = partial;
            }
            emit_json(body);
        };
    });
    auto* sample = lis->add_subcommand("sample", "chi_n = (is_n - 2 sqrt n)/n^{1/6} for random permutations");
    sample->add_option("--n", lis_n)->required()->check(CLI::Range(1, 10000000));
    sample->add_option("--samples", samples)->required()->check(CLI::Range(1L, 100000000L));
    sample->add_option("--seed", seed);
    sample->callback([&] {
        action = [&] {
            ctx.meta_extra["seed"] = seed;
            ctx.meta_extra["samples"] = samples;
            const auto chi = sample_chi_n(lis_n, samples, seed, thread_count(ctx.threads));
            if (csv())
                emit_csv({"chi"}, {chi});
            else
                emit_json({{"n", lis_n}, {"mean", num(mean_of(chi))}, {"variance", num(variance_of(chi))}});
        };
    });

    // tw
    auto* tw = app.add_subcommand("tw", "Tracy-Widom distribution and GUE");
    tw->require_subcommand(1);
    double tmin = -5, tmax = 5, tstep = 0.01;
    double ode_step = PainleveOptions{}.step;
    auto* cdf = tw->add_subcommand("cdf", "F(t) on a grid (CSV) or its moments (JSON)");
    cdf->add_option("--tmin", tmin);
    cdf->add_option("--tmax", tmax);
    cdf->add_option("--step", tstep)->check(CLI::PositiveNumber);
    cdf->add_option("--ode-step", ode_step, "Painleve II integration step")->check(CLI::PositiveNumber);
    cdf->callback([&] {
        action = [&] {
            PainleveOptions o;
            o.step = ode_step;
            const PainleveSolution sol = painleve2_hastings_mcleod(o);
            if (csv()) {
                const RealGrid f = tw_cdf(sol, tmin, tmax, tstep);
                std::vector<double> t, d;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    t.push_back(f.t_at(i));
                    d.push_back(tw_density_at(sol, f.t_at(i)));
                }
                emit_csv({"t", "F", "density"}, {t, f.values, d});
            } else {
                const TwMoments m = tw_moments(sol);
                emit_json({{"mean", num(m.mean)}, {"variance", num(m.variance)}, {"mass", num(m.mass)},
                           {"residual", num(painleve_residual(sol))}, {"amplitude", num(sol.amplitude)},
                           {"median", num(tw_quantile(sol, 0.5))}});
            }
        };
    });
    int gue_n = 200;
    auto* gue = tw->add_subcommand("gue", "Scaled largest GUE eigenvalues (alpha_1 - sqrt(2n)) sqrt(2) n^{1/6}");
    gue->add_option("--n", gue_n)->required()->check(CLI::Range(1, 500));
    gue->add_option("--samples", samples)->required()->check(CLI::Range(1L, 10000000L));
    gue->add_option("--seed", seed);
    gue->callback([&] {
        action = [&] {
            ctx.meta_extra["seed"] = seed;
            ctx.meta_extra["samples"] = samples;
            const auto alpha = gue_scaled_eigenvalue(gue_n, samples, seed, 1, thread_count(ctx.threads));
            if (csv()) {
                emit_csv({"alpha"}, {alpha});
            } else {
                const PainleveSolution sol = painleve2_hastings_mcleod();
                emit_json({{"n", gue_n}, {"mean", num(mean_of(alpha))}, {"variance", num(variance_of(alpha))},
                           {"ks", num(ks_distance(alpha, [&](double t) { return tw_cdf_at(sol, t); }))}});
            }
        };
    });
    std::string sample_csv;
    auto* compare = tw->add_subcommand("compare", "KS distance between a sample CSV and F");
    compare->add_option("--lis-csv,--csv", sample_csv, "CSV whose first column holds the sample")->required();
    compare->callback([&] {
        action = [&] {
            require_json("tw compare");
            const auto v = read_csv_column(sample_csv);
            const PainleveSolution sol = painleve2_hastings_mcleod();
            emit_json({{"samples", static_cast<long>(v.size())}, {"mean", num(mean_of(v))}, {"var", num(variance_of(v))},
                       {"ks", num(ks_distance(v, [&](double t) { return tw_cdf_at(sol, t); }))}});
        };
    });

    // verify-all
    bool full = false;
    auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
    auto* quick_flag = verify->add_flag("--quick", "Reduced scale (default)");
    verify->add_flag("--full", full, "Full scale")->excludes(quick_flag);
    verify->callback([&] {
        action = [&] {
            require_json("verify-all");
            const VerifyLevel level = full ? VerifyLevel::Full : VerifyLevel::Quick;
            const VerifyReport report = verify_all(level, thread_count(ctx.threads), [](const CriterionResult& r) {
                std::cerr << "criterion " << r.id << ' ' << status_name(r.status()) << ' ' << r.title << " (" << fmt12(r.seconds)
                          << " s)\n";
            });
            json criteria = json::array();
            for (const auto& r : report.criteria) {
                json checks = json::array();
                for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
                criteria.push_back({{"id", r.id}, {"title", r.title}, {"status", status_name(r.status())}, {"checks", checks}});
            }
            emit_json({{"level", full ? "full" : "quick"}, {"ok", report.ok()}, {"criteria", criteria}});
            if (!report.ok()) exit_code = kVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "runtime: " << fmt12(seconds) << " s\n";
    return exit_code;
}
