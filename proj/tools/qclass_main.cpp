// Command-line front end: parse instance files, dispatch computations, and
// emit canonical JSON (keys sorted, byte-stable) or TSV tables.
//
// Exit codes: 0 success / verified, 1 a verification check failed,
// 2 precondition, resource, or integrity error, 64 usage or schema error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qclass/chartable.hpp"
#include "qclass/instance.hpp"
#include "qclass/randomgen.hpp"
#include "qclass/verify.hpp"

using nlohmann::json;

namespace {

using namespace qclass;

// Command-line misuse that CLI11 cannot see (e.g. a theorem that does not
// apply to the instance kind); mapped to exit code 64.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const Universe& universe_of(const Instance& inst) {
    return inst.kind == InstanceKind::double_poset ? inst.dposet.u : inst.graph.u;
}

std::vector<std::string> class_reps(const PermGroup& G, const Universe& u) {
    std::vector<std::string> out;
    for (int c = 0; c < G->num_classes(); ++c)
        out.push_back(perm_to_cycle_string(G->elements[G->class_rep[c]], u));
    return out;
}

json cf_json(const ClassFun& v) {
    json a = json::array();
    for (const Cyc& x : v.v) a.push_back(cyc_to_string(x));
    return a;
}

// One t-coefficient list per class, uniform length.
json tcf_json(const TPoly<ClassFun>& p, int num_classes) {
    json per_class = json::array();
    for (int c = 0; c < num_classes; ++c) {
        json lst = json::array();
        for (const ClassFun& x : p.c) lst.push_back(cyc_to_string(x.v[c]));
        per_class.push_back(lst);
    }
    return per_class;
}

std::string tcf_cell(const TPoly<ClassFun>& p, int cls) {
    if (p.c.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        if (k) s += ",";
        s += cyc_to_string(p.c[k].v[cls]);
    }
    return s;
}

std::string basis_prefix(Basis b) { return b == Basis::F ? "F" : "M"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_chartable(const Instance& inst, bool tsv) {
    CharTable T = character_table(inst.group);
    std::vector<std::string> reps = class_reps(inst.group, universe_of(inst));
    if (tsv) {
        std::string header = "character";
        for (const std::string& r : reps) header += "\t" + r;
        std::cout << header << "\n";
        for (std::size_t i = 0; i < T.chars.size(); ++i) {
            std::string row = "chi_" + std::to_string(i);
            for (const Cyc& x : T.chars[i].v) row += "\t" + cyc_to_string(x);
            std::cout << row << "\n";
        }
    } else {
        json out;
        json chars = json::array();
        for (const ClassFun& chi : T.chars) chars.push_back(cf_json(chi));
        out["characters"] = chars;
        json sizes = json::array();
        for (int c = 0; c < inst.group->num_classes(); ++c)
            sizes.push_back(inst.group->classes[static_cast<std::size_t>(c)].size());
        out["class_sizes"] = sizes;
        out["classes"] = reps;
        out["group_order"] = inst.group->order();
        emit(out);
    }
    return 0;
}

int cmd_omega(const Instance& inst, const std::string& basis, bool want_orbital,
              bool want_coeven, bool tsv) {
    if (inst.kind != InstanceKind::double_poset)
        throw usage_error("the omega command needs a double-poset instance");
    Basis b = basis == "F" ? Basis::F : Basis::M;
    QSym<ClassFun> q = to_basis(omega_qcf(inst.dposet, inst.group), b);

    if (want_orbital || want_coeven) {
        QSym<Rat> o = want_orbital ? orbital(q) : coeven(q);
        if (tsv) {
            std::cout << "composition\tcoefficient\n";
            for (const auto& [alpha, c] : o.terms)
                std::cout << basis_prefix(b) << "_" << detail::comp_to_string(alpha) << "\t"
                          << rat_to_string(c) << "\n";
        } else {
            json out;
            out["average"] = want_orbital ? "orbital" : "coeven";
            out["basis"] = basis_prefix(b);
            out["degree"] = o.degree;
            out["group_order"] = inst.group->order();
            json terms = json::object();
            for (const auto& [alpha, c] : o.terms)
                terms[detail::comp_to_string(alpha)] = rat_to_string(c);
            out["terms"] = terms;
            emit(out);
        }
        return 0;
    }

    std::vector<std::string> reps = class_reps(inst.group, inst.dposet.u);
    if (tsv) {
        std::string header = "class";
        for (const auto& [alpha, c] : q.terms)
            header += "\t" + basis_prefix(b) + "_" + detail::comp_to_string(alpha);
        std::cout << header << "\n";
        for (int cls = 0; cls < inst.group->num_classes(); ++cls) {
            std::string row = reps[static_cast<std::size_t>(cls)];
            for (const auto& [alpha, c] : q.terms)
                row += "\t" + cyc_to_string(c.v[static_cast<std::size_t>(cls)]);
            std::cout << row << "\n";
        }
    } else {
        json out;
        out["basis"] = basis_prefix(b);
        out["classes"] = reps;
        out["degree"] = q.degree;
        out["group_order"] = inst.group->order();
        json terms = json::object();
        for (const auto& [alpha, c] : q.terms) terms[detail::comp_to_string(alpha)] = cf_json(c);
        out["terms"] = terms;
        emit(out);
    }
    return 0;
}

int cmd_chromatic(const Instance& inst, const std::string& basis,
                  const std::optional<int>& t_degree, bool tsv) {
    if (inst.kind != InstanceKind::digraph)
        throw usage_error("the chromatic command needs a digraph instance");
    Basis b = basis == "F" ? Basis::F : Basis::M;
    QSym<TPoly<ClassFun>> q = to_basis(chromatic_qcf(inst.graph, inst.group), b);
    std::vector<std::string> reps = class_reps(inst.group, inst.graph.u);
    int nc = inst.group->num_classes();

    if (t_degree) {
        QSym<ClassFun> s = detail::tpoly_slice(q, static_cast<std::size_t>(*t_degree));
        if (tsv) {
            std::string header = "class";
            for (const auto& [alpha, c] : s.terms)
                header += "\t" + basis_prefix(b) + "_" + detail::comp_to_string(alpha);
            std::cout << header << "\n";
            for (int cls = 0; cls < nc; ++cls) {
                std::string row = reps[static_cast<std::size_t>(cls)];
                for (const auto& [alpha, c] : s.terms)
                    row += "\t" + cyc_to_string(c.v[static_cast<std::size_t>(cls)]);
                std::cout << row << "\n";
            }
        } else {
            json out;
            out["basis"] = basis_prefix(b);
            out["classes"] = reps;
            out["degree"] = s.degree;
            out["group_order"] = inst.group->order();
            out["t_degree"] = *t_degree;
            json terms = json::object();
            for (const auto& [alpha, c] : s.terms)
                terms[detail::comp_to_string(alpha)] = cf_json(c);
            out["terms"] = terms;
            emit(out);
        }
        return 0;
    }

    if (tsv) {
        std::string header = "class";
        for (const auto& [alpha, c] : q.terms)
            header += "\t" + basis_prefix(b) + "_" + detail::comp_to_string(alpha);
        std::cout << header << "\n";
        for (int cls = 0; cls < nc; ++cls) {
            std::string row = reps[static_cast<std::size_t>(cls)];
            for (const auto& [alpha, c] : q.terms) row += "\t" + tcf_cell(c, cls);
            std::cout << row << "\n";
        }
    } else {
        json out;
        out["basis"] = basis_prefix(b);
        out["classes"] = reps;
        out["degree"] = q.degree;
        out["group_order"] = inst.group->order();
        json terms = json::object();
        for (const auto& [alpha, c] : q.terms)
            terms[detail::comp_to_string(alpha)] = tcf_json(c, nc);
        out["terms"] = terms;
        emit(out);
    }
    return 0;
}

int cmd_orderpoly(const Instance& inst, const std::optional<long>& at, bool tsv) {
    std::vector<std::string> reps = class_reps(inst.group, universe_of(inst));
    int nc = inst.group->num_classes();

    if (inst.kind == InstanceKind::double_poset) {
        BinPoly<ClassFun> p = order_poly_cf(inst.dposet, inst.group);
        if (at) {
            ClassFun value = p.evaluate(*at);
            if (tsv) {
                std::cout << "class\tvalue\n";
                for (int cls = 0; cls < nc; ++cls)
                    std::cout << reps[static_cast<std::size_t>(cls)] << "\t"
                              << cyc_to_string(value.v[static_cast<std::size_t>(cls)]) << "\n";
            } else {
                json out;
                out["at"] = *at;
                out["classes"] = reps;
                out["group_order"] = inst.group->order();
                out["values"] = cf_json(value);
                emit(out);
            }
            return 0;
        }
        if (tsv) {
            std::string header = "class";
            for (std::size_t i = 0; i < p.f.size(); ++i)
                header += "\tbinom(x," + std::to_string(i) + ")";
            std::cout << header << "\n";
            for (int cls = 0; cls < nc; ++cls) {
                std::string row = reps[static_cast<std::size_t>(cls)];
                for (const ClassFun& c : p.f)
                    row += "\t" + cyc_to_string(c.v[static_cast<std::size_t>(cls)]);
                std::cout << row << "\n";
            }
        } else {
            json out;
            out["classes"] = reps;
            json coeffs = json::array();
            for (const ClassFun& c : p.f) coeffs.push_back(cf_json(c));
            out["coefficients"] = coeffs;
            out["dimension"] = p.dimension();
            out["group_order"] = inst.group->order();
            emit(out);
        }
        return 0;
    }

    BinPoly<TPoly<ClassFun>> p = chromatic_poly_cf(inst.graph, inst.group);
    if (at) {
        TPoly<ClassFun> value = p.evaluate(*at);
        if (tsv) {
            std::cout << "class\tvalue\n";
            for (int cls = 0; cls < nc; ++cls)
                std::cout << reps[static_cast<std::size_t>(cls)] << "\t" << tcf_cell(value, cls)
                          << "\n";
        } else {
            json out;
            out["at"] = *at;
            out["classes"] = reps;
            out["group_order"] = inst.group->order();
            out["values"] = tcf_json(value, nc);
            emit(out);
        }
        return 0;
    }
    if (tsv) {
        std::string header = "class";
        for (std::size_t i = 0; i < p.f.size(); ++i)
            header += "\tbinom(x," + std::to_string(i) + ")";
        std::cout << header << "\n";
        for (int cls = 0; cls < nc; ++cls) {
            std::string row = reps[static_cast<std::size_t>(cls)];
            for (const TPoly<ClassFun>& c : p.f) row += "\t" + tcf_cell(c, cls);
            std::cout << row << "\n";
        }
    } else {
        json out;
        out["classes"] = reps;
        json coeffs = json::array();
        for (const TPoly<ClassFun>& c : p.f) coeffs.push_back(tcf_json(c, nc));
        out["coefficients"] = coeffs;
        out["dimension"] = p.dimension();
        out["group_order"] = inst.group->order();
        emit(out);
    }
    return 0;
}

int cmd_verify(const std::string& theorem, const Instance& inst, bool tsv) {
    bool dp = inst.kind == InstanceKind::double_poset;
    VerdictReport r;
    if (theorem == "reciprocity") {
        r = dp ? check_reciprocity_dposet(inst.dposet, inst.group)
               : check_reciprocity_digraph(inst.graph, inst.group);
    } else if (theorem == "f-effective") {
        r = dp ? check_F_effective(omega_qcf(inst.dposet, inst.group))
               : check_F_effective(chromatic_qcf(inst.graph, inst.group));
    } else if (theorem == "m-increasing") {
        r = dp ? check_M_increasing(omega_qcf(inst.dposet, inst.group))
               : check_M_increasing(chromatic_qcf(inst.graph, inst.group));
    } else if (theorem == "flawless") {
        r = dp ? check_flawless(order_poly_cf(inst.dposet, inst.group))
               : check_flawless(chromatic_poly_cf(inst.graph, inst.group));
    } else if (theorem == "h-effective") {
        r = dp ? check_h_effective(order_poly_cf(inst.dposet, inst.group))
               : check_h_effective(chromatic_poly_cf(inst.graph, inst.group));
    } else if (theorem == "orbital-reciprocity") {
        r = dp ? check_orbital_reciprocity(inst.dposet, inst.group)
               : check_orbital_reciprocity(inst.graph, inst.group);
    } else if (theorem == "orientation-decomposition") {
        if (dp)
            throw usage_error("orientation-decomposition applies to digraph instances only");
        DecompositionReport d = verify_orientation_decomposition(inst.graph, inst.group);
        r.theorem = "orientation decomposition";
        r.pass = d.ok;
        r.witness = d.witness;
    } else {
        throw usage_error("unknown theorem \"" + theorem + "\"");
    }
    r.instance = inst.name;
    if (tsv) {
        std::cout << "theorem\tinstance\tpass\twitness\n"
                  << r.theorem << "\t" << r.instance << "\t" << (r.pass ? "true" : "false")
                  << "\t" << r.witness << "\n";
    } else {
        std::cout << to_json(r) << "\n";
    }
    return r.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Self test: seeded random instances, each index drawing from its own
// partitioned stream so runs are reproducible under any thread schedule.

struct OneResult {
    long checks = 0;
    int exploratory = 0;
    std::vector<VerdictReport> failures;
};

OneResult run_selftest_instance(std::uint64_t seed, int index) {
    OneResult res;
    RandomGen rng(seed + 1000003ULL * static_cast<std::uint64_t>(index));
    auto note = [&](VerdictReport r) {
        ++res.checks;
        if (!r.pass) res.failures.push_back(std::move(r));
    };
    try {
        int n = rng.uniform(1, 5);
        DoublePoset D = random_locally_special_dposet(rng, n);
        PermGroup G = random_subgroup(rng, automorphisms(D));
        note(check_reciprocity_dposet(D, G));
        note(check_orbital_reciprocity(D, G));
        QSym<ClassFun> om = omega_qcf(D, G);
        note(check_F_effective(om));
        note(check_M_increasing(om));
        BinPoly<ClassFun> p = order_poly_cf(D, G);
        note(check_flawless(p));
        note(check_h_effective(p));
        orbital(om);  // integrality of every averaged coefficient is
        coeven(om);   // enforced inside; a violation raises an
        orbital(p);   // integrity error caught below
        coeven(p);
        res.checks += 4;

        int m = rng.uniform(1, 4);
        Digraph Gr = random_digraph(rng, m);
        PermGroup H = random_subgroup(rng, automorphisms(Gr));
        note(check_reciprocity_digraph(Gr, H));
        note(check_orbital_reciprocity(Gr, H));
        QSym<TPoly<ClassFun>> ch = chromatic_qcf(Gr, H);
        note(check_F_effective(ch));
        note(check_M_increasing(ch));
        BinPoly<TPoly<ClassFun>> cp = chromatic_poly_cf(Gr, H);
        note(check_flawless(cp));
        note(check_h_effective(cp));
        DecompositionReport dr = verify_orientation_decomposition(Gr, H);
        ++res.checks;
        if (!dr.ok)
            res.failures.push_back({"orientation decomposition",
                                    "random digraph " + std::to_string(index), false,
                                    dr.witness});

        // Exploratory lane: outside the locally special hypothesis failures
        // are expected and only counted, but a failure must carry a witness.
        int k = rng.uniform(2, 4);
        DoublePoset E = random_non_locally_special_dposet(rng, k);
        VerdictReport er = check_reciprocity_dposet(E, trivial_group(k), false);
        ++res.checks;
        if (!er.pass) {
            ++res.exploratory;
            if (er.witness.empty())
                res.failures.push_back({"reciprocity witness integrity", er.instance, false,
                                        "failing exploratory check produced no witness"});
        }
    } catch (const std::exception& e) {
        res.failures.push_back({"selftest", "random instance " + std::to_string(index), false,
                                std::string(e.what())});
    }
    return res;
}

int cmd_selftest(std::uint64_t seed, int count, bool tsv) {
    std::vector<OneResult> results(static_cast<std::size_t>(count));
    unsigned jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min(jobs, 8u);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i; (i = next.fetch_add(1)) < count;)
            results[static_cast<std::size_t>(i)] = run_selftest_instance(seed, i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    long checks = 0;
    int exploratory = 0;
    std::vector<VerdictReport> failures;
    for (const OneResult& r : results) {
        checks += r.checks;
        exploratory += r.exploratory;
        for (const VerdictReport& f : r.failures) failures.push_back(f);
    }
    if (tsv) {
        std::cout << "checks_run\tcount\texploratory_failures\tfailures\tpass\tseed\n"
                  << checks << "\t" << count << "\t" << exploratory << "\t" << failures.size()
                  << "\t" << (failures.empty() ? "true" : "false") << "\t" << seed << "\n";
    } else {
        json out;
        out["checks_run"] = checks;
        out["count"] = count;
        out["exploratory_failures"] = exploratory;
        json fl = json::array();
        for (const VerdictReport& f : failures) fl.push_back(json::parse(to_json(f)));
        out["failures"] = fl;
        out["pass"] = failures.empty();
        out["seed"] = seed;
        emit(out);
    }
    return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact equivariant quasisymmetric invariants of double posets and digraphs"};
    app.require_subcommand(1);

    std::string file_chartable, file_omega, file_chromatic, file_orderpoly, file_verify;
    std::string omega_basis = "M", chromatic_basis = "M", theorem;
    bool omega_orbital = false, omega_coeven = false;
    int t_degree_v = 0;
    long at_v = 0;
    std::uint64_t seed = 20260822ULL;
    int count = 200;
    bool tsv_chartable = false, tsv_omega = false, tsv_chromatic = false,
         tsv_orderpoly = false, tsv_verify = false, tsv_selftest = false;

    CLI::App* sc_chartable =
        app.add_subcommand("chartable", "Character table of the instance's symmetry group");
    sc_chartable->add_option("file", file_chartable, "instance file")->required();
    sc_chartable->add_flag("--tsv", tsv_chartable, "emit a TSV table instead of JSON");

    CLI::App* sc_omega = app.add_subcommand(
        "omega", "Equivariant enumerator of a double poset's order-preserving maps");
    sc_omega->add_option("file", file_omega, "instance file")->required();
    sc_omega->add_option("--basis", omega_basis, "output basis: M (monomial) or F (fundamental)")
        ->check(CLI::IsMember({"M", "F"}));
    CLI::Option* opt_orb = sc_omega->add_flag("--orbital", omega_orbital,
                                              "average the coefficients over the group");
    sc_omega->add_flag("--coeven", omega_coeven,
                       "average the coefficients against the sign character")
        ->excludes(opt_orb);
    sc_omega->add_flag("--tsv", tsv_omega, "emit a TSV table instead of JSON");

    CLI::App* sc_chromatic =
        app.add_subcommand("chromatic", "Equivariant chromatic enumerator of a digraph");
    sc_chromatic->add_option("file", file_chromatic, "instance file")->required();
    sc_chromatic
        ->add_option("--basis", chromatic_basis, "output basis: M (monomial) or F (fundamental)")
        ->check(CLI::IsMember({"M", "F"}));
    sc_chromatic->add_option("--t-degree", t_degree_v, "emit only the coefficient of t^k")
        ->check(CLI::NonNegativeNumber);
    sc_chromatic->add_flag("--tsv", tsv_chromatic, "emit a TSV table instead of JSON");

    CLI::App* sc_orderpoly = app.add_subcommand(
        "orderpoly", "Counting polynomial in the binomial basis (order or chromatic)");
    sc_orderpoly->add_option("file", file_orderpoly, "instance file")->required();
    sc_orderpoly->add_option("--at", at_v, "evaluate the polynomial at an integer");
    sc_orderpoly->add_flag("--tsv", tsv_orderpoly, "emit a TSV table instead of JSON");

    CLI::App* sc_verify = app.add_subcommand("verify", "Check an identity on an instance");
    sc_verify
        ->add_option("theorem", theorem,
                     "one of: reciprocity, f-effective, m-increasing, flawless, h-effective, "
                     "orbital-reciprocity, orientation-decomposition")
        ->required()
        ->check(CLI::IsMember({"reciprocity", "f-effective", "m-increasing", "flawless",
                               "h-effective", "orbital-reciprocity",
                               "orientation-decomposition"}));
    sc_verify->add_option("file", file_verify, "instance file")->required();
    sc_verify->add_flag("--tsv", tsv_verify, "emit a TSV row instead of JSON");

    CLI::App* sc_selftest =
        app.add_subcommand("selftest", "Run the seeded random verification suites");
    sc_selftest->add_option("--seed", seed, "base seed for the partitioned random streams");
    sc_selftest->add_option("--count", count, "number of random instances per suite")
        ->check(CLI::PositiveNumber);
    sc_selftest->add_flag("--tsv", tsv_selftest, "emit a TSV summary instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    std::optional<int> t_degree;
    if (sc_chromatic->count("--t-degree") > 0) t_degree = t_degree_v;
    std::optional<long> at;
    if (sc_orderpoly->count("--at") > 0) at = at_v;

    try {
        if (sc_chartable->parsed())
            return cmd_chartable(load_instance(file_chartable), tsv_chartable);
        if (sc_omega->parsed())
            return cmd_omega(load_instance(file_omega), omega_basis, omega_orbital,
                             omega_coeven, tsv_omega);
        if (sc_chromatic->parsed())
            return cmd_chromatic(load_instance(file_chromatic), chromatic_basis, t_degree,
                                 tsv_chromatic);
        if (sc_orderpoly->parsed())
            return cmd_orderpoly(load_instance(file_orderpoly), at, tsv_orderpoly);
        if (sc_verify->parsed()) return cmd_verify(theorem, load_instance(file_verify), tsv_verify);
        if (sc_selftest->parsed()) return cmd_selftest(seed, count, tsv_selftest);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const precondition_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const integrity_error& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
