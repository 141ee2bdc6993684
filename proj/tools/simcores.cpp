#include <CLI11.hpp>

#include <atomic>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cores/counting.hpp"
#include "cores/extremal.hpp"
#include "cores/oracle.hpp"
#include "cores/serialize.hpp"
#include "cores/zcoords.hpp"

using namespace cores;

namespace {

struct Options {
    std::string format = "json";
    long long threads = 1;
};

std::vector<long long> parse_list(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoll(item));
    return out;
}

std::string rational_str(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

void emit_count(const Options& opt, json query, const BigInt& count) {
    if (opt.format == "plain")
        std::cout << count.get_str() << "\n";
    else if (opt.format == "csv")
        std::cout << "count\n" << count.get_str() << "\n";
    else
        std::cout << count_result(std::move(query), count).dump() << "\n";
}

void emit_partitions(const Options& opt, const std::vector<Partition>& list) {
    if (opt.format == "csv") {
        std::cout << "size,parts,self_conjugate\n";
        for (const Partition& p : list) {
            std::cout << p.size().get_str() << ",";
            for (std::size_t i = 0; i < p.num_parts(); ++i)
                std::cout << (i ? " " : "") << p.parts()[i];
            std::cout << "," << (conjugate(p) == p ? "true" : "false") << "\n";
        }
    } else if (opt.format == "plain") {
        for (const Partition& p : list)
            std::cout << p.to_string() << "\n";
    } else {
        for (const Partition& p : list)
            std::cout << to_json(p).dump() << "\n";
    }
}

int run_count(const Options& opt, const std::string& moduli_csv) {
    CoreSpec spec(parse_list(moduli_csv));
    BigInt count = static_cast<long>(
        enumerate_cores(spec, EnumerationBudget::tripathi(spec)).size());
    emit_count(opt, json{{"moduli", spec.moduli()}}, count);
    return 0;
}

int run_enumerate(const Options& opt, const std::string& moduli_csv,
                  long long bound) {
    CoreSpec spec(parse_list(moduli_csv));
    EnumerationBudget budget =
        bound >= 0 ? EnumerationBudget::explicit_bound(static_cast<long>(bound))
                   : EnumerationBudget::tripathi(spec);
    emit_partitions(opt, enumerate_cores(spec, budget));
    return 0;
}

int run_largest(const Options& opt, long long s, bool selfconj, long long a,
                long long b) {
    if (s >= 0) {
        if (selfconj) {
            ExtremalCore e = construct_largest_selfconj_sss(s);
            if (opt.format == "plain")
                std::cout << e.size.get_str() << " " << e.partition.to_string()
                          << "\n";
            else if (opt.format == "csv")
                std::cout << "s,size,partition,self_conjugate\n"
                          << s << "," << e.size.get_str() << ","
                          << e.partition.to_string() << ",true\n";
            else
                std::cout << json{{"s", s},
                                  {"size", e.size.get_str()},
                                  {"partition", e.partition.parts()},
                                  {"self_conjugate", true}}
                                 .dump()
                          << "\n";
        } else {
            BigInt size = largest_size_sss(s);
            if (opt.format == "plain")
                std::cout << size.get_str() << "\n";
            else if (opt.format == "csv")
                std::cout << "s,size\n" << s << "," << size.get_str() << "\n";
            else
                std::cout << json{{"s", s}, {"size", size.get_str()}}.dump()
                          << "\n";
        }
        return 0;
    }
    BigInt size = largest_size_ab(a, b);
    if (opt.format == "plain")
        std::cout << size.get_str() << "\n";
    else if (opt.format == "csv")
        std::cout << "a,b,size\n" << a << "," << b << "," << size.get_str() << "\n";
    else
        std::cout << json{{"a", a}, {"b", b}, {"size", size.get_str()}}.dump()
                  << "\n";
    return 0;
}

int run_average(const Options& opt, long long a, long long b) {
    Rational avg = average_size_formula(a, b);
    if (opt.format == "plain")
        std::cout << rational_str(avg) << "\n";
    else if (opt.format == "csv")
        std::cout << "a,b,average\n"
                  << a << "," << b << "," << rational_str(avg) << "\n";
    else
        std::cout << json{{"a", a}, {"b", b}, {"average", rational_str(avg)}}.dump()
                  << "\n";
    return 0;
}

int run_biject(const Options& opt, long long a, const std::string& parts_csv,
               long long b0) {
    Partition p(parse_list(parts_csv));
    CCoords c = partition_to_c(p, a);
    json out{{"c", c.c()}};
    if (b0 >= 1) {
        ZCoords z = x_to_z(c_to_x(c), b0);
        out["b0"] = b0;
        out["z"] = z.z();
    }
    if (opt.format == "csv") {
        std::cout << "c\n";
        for (std::size_t i = 0; i < c.c().size(); ++i)
            std::cout << (i ? " " : "") << c.c()[i];
        std::cout << "\n";
    } else if (opt.format == "plain") {
        for (std::size_t i = 0; i < c.c().size(); ++i)
            std::cout << (i ? " " : "") << c.c()[i];
        std::cout << "\n";
    } else {
        std::cout << out.dump() << "\n";
    }
    return 0;
}

struct VerifyRow {
    std::string theorem;
    std::string params;
    std::string formula;
    std::string oracle;
    bool match = false;
};

BigInt oracle_count_guarded(const std::vector<long long>& moduli, long long ceiling) {
    CoreSpec spec(moduli);
    EnumerationBudget budget = EnumerationBudget::tripathi(spec);
    if (budget.max_size > static_cast<long>(ceiling)) {
        std::ostringstream os;
        os << "budget ceiling exceeded by " << spec.to_string() << " (bound "
           << budget.max_size.get_str() << " > " << ceiling << ")";
        throw std::invalid_argument(os.str());
    }
    return static_cast<long>(enumerate_cores(spec, budget).size());
}

int run_verify(const Options& opt, const std::string& suite, long long max_ab_sum,
               long long max_s, long long ceiling) {
    struct Job {
        std::string theorem;
        std::string params;
        std::function<std::pair<std::string, std::string>()> eval;
    };
    std::vector<Job> jobs;
    auto tuple = [](std::initializer_list<long long> vs) {
        std::ostringstream os;
        bool first = true;
        for (long long v : vs) {
            os << (first ? "(" : ",") << v;
            first = false;
        }
        os << ")";
        return os.str();
    };

    bool all = suite == "all";
    if (all || suite == "cat")
        for (long long a = 2; a <= max_ab_sum - 2; ++a)
            for (long long b = a + 1; a + b <= max_ab_sum; ++b) {
                if (std::gcd(a, b) != 1)
                    continue;
                jobs.push_back({"cat", tuple({a, b}), [=] {
                                    return std::pair(cat(a, b).get_str(),
                                                     oracle_count_guarded({a, b}, ceiling)
                                                         .get_str());
                                }});
            }
    if (all || suite == "average")
        for (long long a = 2; a <= max_ab_sum - 2; ++a)
            for (long long b = a + 1; a + b <= max_ab_sum; ++b) {
                if (std::gcd(a, b) != 1)
                    continue;
                jobs.push_back({"average", tuple({a, b}), [=] {
                                    CoreSpec spec({a, b});
                                    EnumerationBudget budget =
                                        EnumerationBudget::tripathi(spec);
                                    if (budget.max_size > static_cast<long>(ceiling))
                                        oracle_count_guarded({a, b}, ceiling);
                                    return std::pair(
                                        rational_str(average_size_formula(a, b)),
                                        rational_str(
                                            oracle_stats(spec, budget).mean_size()));
                                }});
            }
    if (all || suite == "largest-ab")
        for (long long a = 2; a <= max_ab_sum - 2; ++a)
            for (long long b = a + 1; a + b <= max_ab_sum; ++b) {
                if (std::gcd(a, b) != 1)
                    continue;
                jobs.push_back({"largest-ab", tuple({a, b}), [=] {
                                    CoreSpec spec({a, b});
                                    EnumerationBudget budget =
                                        EnumerationBudget::tripathi(spec);
                                    if (budget.max_size > static_cast<long>(ceiling))
                                        oracle_count_guarded({a, b}, ceiling);
                                    return std::pair(
                                        largest_size_ab(a, b).get_str(),
                                        oracle_stats(spec, budget)
                                            .max_size_attained.get_str());
                                }});
            }
    if (all || suite == "sss")
        for (long long s = 2; s <= max_s; ++s)
            jobs.push_back({"sss", tuple({s}), [=] {
                                CoreSpec spec({s, s + 1, s + 2});
                                EnumerationBudget budget =
                                    EnumerationBudget::tripathi(spec);
                                if (budget.max_size > static_cast<long>(ceiling))
                                    oracle_count_guarded({s, s + 1}, ceiling);
                                return std::pair(largest_size_sss(s).get_str(),
                                                 oracle_stats(spec, budget)
                                                     .max_size_attained.get_str());
                            }});
    if (all || suite == "selfconj")
        for (long long s = 2; s <= max_s; ++s)
            jobs.push_back({"selfconj", tuple({s}), [=] {
                                CoreSpec spec({s, s + 1, s + 2});
                                EnumerationBudget budget =
                                    EnumerationBudget::tripathi(spec);
                                if (budget.max_size > static_cast<long>(ceiling))
                                    oracle_count_guarded({s, s + 1}, ceiling);
                                BigInt best = 0;
                                long long hits = 0;
                                for (const Partition& p :
                                     oracle_stats(spec, budget).self_conjugate) {
                                    if (p.size() > best) {
                                        best = p.size();
                                        hits = 0;
                                    }
                                    if (p.size() == best)
                                        ++hits;
                                }
                                std::string oracle = best.get_str();
                                if (hits != 1)
                                    oracle += " (not unique)";
                                return std::pair(
                                    largest_size_selfconj_sss(s).get_str(), oracle);
                            }});
    if (all || suite == "ssd")
        for (long long s = 2; s <= max_s; ++s)
            for (long long d = 1; s + d <= max_s + 1; ++d) {
                if (std::gcd(s, d) != 1)
                    continue;
                jobs.push_back({"ssd", tuple({s, d}), [=] {
                                    return std::pair(
                                        count_ssd(s, d).get_str(),
                                        oracle_count_guarded(
                                            {s, s + d, s + 2 * d}, ceiling)
                                            .get_str());
                                }});
            }
    if (all || suite == "abc")
        for (long long a = 4; a <= 6; ++a)
            for (long long b = a + 1; b <= 9; ++b) {
                if (std::gcd(a, b) != 1)
                    continue;
                for (long long c = 1; c <= 30; ++c) {
                    if ((2 * b + c) % a != 0 || 2 * c <= a * b - 4 * b)
                        continue;
                    jobs.push_back({"abc", tuple({a, b, c}), [=] {
                                        return std::pair(
                                            count_abc(a, b, c).get_str(),
                                            oracle_count_guarded({a, b, c}, ceiling)
                                                .get_str());
                                    }});
                }
            }
    if (jobs.empty())
        throw std::invalid_argument("unknown verify suite: " + suite);

    std::vector<VerifyRow> rows(jobs.size());
    long long nthreads = std::max(opt.threads, 1LL);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            VerifyRow row;
            row.theorem = jobs[i].theorem;
            row.params = jobs[i].params;
            try {
                auto [formula, oracle] = jobs[i].eval();
                row.formula = formula;
                row.oracle = oracle;
                row.match = formula == oracle;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error.empty())
                    first_error = e.what();
                failed = true;
                row.formula = "error";
                row.oracle = e.what();
            }
            rows[i] = std::move(row);
        }
    };
    for (long long t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failed)
        throw std::invalid_argument(first_error);

    const VerifyRow* counterexample = nullptr;
    for (const auto& row : rows)
        if (!row.match && !counterexample)
            counterexample = &row;

    if (opt.format == "json") {
        for (const auto& row : rows)
            std::cout << json{{"theorem", row.theorem},
                              {"params", row.params},
                              {"formula", row.formula},
                              {"oracle", row.oracle},
                              {"match", row.match}}
                             .dump()
                      << "\n";
    } else {
        if (opt.format == "csv")
            std::cout << "theorem,params,formula,oracle,match\n";
        for (const auto& row : rows)
            std::cout << row.theorem << "," << row.params << "," << row.formula
                      << "," << row.oracle << "," << (row.match ? "true" : "false")
                      << "\n";
    }
    if (counterexample) {
        std::cerr << "mismatch: " << counterexample->theorem << " "
                  << counterexample->params << " formula "
                  << counterexample->formula << " oracle "
                  << counterexample->oracle << "\n";
        return 1;
    }
    return 0;
}

int run_table(const Options& opt, const std::string& family, long long n) {
    std::vector<std::string> values;
    for (long long k = 1; k <= n; ++k) {
        if (family == "sss")
            values.push_back(k == 1 ? BigInt(1).get_str()
                                    : count_ssd(k, 1).get_str());
        else if (family == "largest-sss")
            values.push_back(largest_size_sss(k).get_str());
        else if (family == "selfconj-sss")
            values.push_back(largest_size_selfconj_sss(k).get_str());
        else if (family == "cat")
            values.push_back(cat(k, k + 1).get_str());
        else
            throw std::invalid_argument("unknown table family: " + family);
    }
    if (opt.format == "json") {
        std::cout << json(values).dump() << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << i + 1 << "," << values[i] << "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << (i ? " " : "") << values[i];
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simultaneous core partition toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);

    std::string moduli;
    long long bound = -1;
    auto* count = app.add_subcommand("count", "count simultaneous cores");
    count->add_option("--moduli", moduli, "comma-separated moduli")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list simultaneous cores");
    enumerate->add_option("--moduli", moduli, "comma-separated moduli")->required();
    enumerate->add_option("--bound", bound, "explicit size bound");

    long long s = -1, a = 0, b = 0, b0 = -1;
    bool selfconj = false;
    auto* largest = app.add_subcommand("largest", "largest core sizes");
    largest->add_option("--s", s, "the (s,s+1,s+2) family");
    largest->add_flag("--selfconj", selfconj, "restrict to self-conjugate cores");
    largest->add_option("--a", a, "first modulus");
    largest->add_option("--b", b, "second modulus");

    auto* average = app.add_subcommand("average", "average (a,b)-core size");
    average->add_option("--a", a, "first modulus")->required();
    average->add_option("--b", b, "second modulus")->required();

    std::string partition_csv;
    auto* biject = app.add_subcommand("biject", "partition to coordinates");
    biject->add_option("--a", a, "modulus")->required();
    biject->add_option("--partition", partition_csv, "comma-separated parts");
    biject->add_option("--b0", b0, "also emit z-coordinates for this b0");

    std::string suite = "all";
    long long max_ab_sum = 12, max_s = 10, ceiling = 2000;
    auto* verify = app.add_subcommand("verify", "formula-vs-oracle sweeps");
    verify->add_option("--suite", suite,
                       "cat|average|largest-ab|sss|selfconj|ssd|abc|all");
    verify->add_option("--max-ab-sum", max_ab_sum, "bound on a+b");
    verify->add_option("--max-s", max_s, "bound on s");
    verify->add_option("--ceiling", ceiling, "enumeration budget ceiling");

    std::string family;
    long long n = 10;
    auto* table = app.add_subcommand("table", "emit a counting sequence");
    table->add_option("--family", family, "sss|largest-sss|selfconj-sss|cat")
        ->required();
    table->add_option("--n", n, "sequence length");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed())
            return run_count(opt, moduli);
        if (enumerate->parsed())
            return run_enumerate(opt, moduli, bound);
        if (largest->parsed()) {
            if (s < 0 && (a < 1 || b < 1))
                throw std::invalid_argument("largest needs --s or --a/--b");
            return run_largest(opt, s, selfconj, a, b);
        }
        if (average->parsed())
            return run_average(opt, a, b);
        if (biject->parsed())
            return run_biject(opt, a, partition_csv, b0);
        if (verify->parsed())
            return run_verify(opt, suite, max_ab_sum, max_s, ceiling);
        if (table->parsed())
            return run_table(opt, family, n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
