// Command-line front end: every library operation on polyhedron JSON files,
// with human-readable tables on stdout and canonical JSON under --json.
// Exit codes: 0 success, 1 failed verification checks, 2 validation errors
// (parse failures, dimension mismatches, empty sets, hypothesis violations).

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "hausconv/json_io.hpp"

using namespace hausconv;

namespace {

RatVec parse_dir(const std::string& csv) {
    RatVec v;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        v.push_back(rat_from_string(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return v;
}

std::vector<std::vector<std::size_t>> parse_subsets(const std::string& spec) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t semi = spec.find(';', pos);
        if (semi == std::string::npos) semi = spec.size();
        std::string group = spec.substr(pos, semi - pos);
        std::vector<std::size_t> idx;
        std::size_t gp = 0;
        while (gp <= group.size() && !group.empty()) {
            std::size_t comma = group.find(',', gp);
            if (comma == std::string::npos) comma = group.size();
            idx.push_back(static_cast<std::size_t>(std::stoul(group.substr(gp, comma - gp))));
            gp = comma + 1;
        }
        out.push_back(std::move(idx));
        pos = semi + 1;
    }
    return out;
}

void emit(const Json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string poly_summary(const Polyhedron& p) {
    const VRep& v = p.vrep();
    std::string s = "dim " + std::to_string(p.dim()) + ": " + std::to_string(v.vertices.size()) +
                    " vertices, " + std::to_string(v.rays.size()) + " rays, lineality dim " +
                    std::to_string(v.lineality.size()) + "\n";
    for (const RatVec& x : v.vertices) s += "  vertex    " + vec_to_string(x) + "\n";
    for (const RatVec& x : v.rays) s += "  ray       " + vec_to_string(x) + "\n";
    for (const RatVec& x : v.lineality) s += "  lineality " + vec_to_string(x) + "\n";
    return s;
}

// All nonempty subsets of {1..n}.
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

struct VerifyAll {
    std::vector<std::string> files;
    std::vector<Polyhedron> polys;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    bool json = false;
    int failures = 0;
    Json checks = Json::array();

    void record(const std::string& name, bool pass, const std::string& note = {}) {
        if (!pass) ++failures;
        Json j;
        j["check"] = name;
        j["pass"] = pass;
        if (!note.empty()) j["note"] = note;
        checks.push_back(j);
        if (!json) std::cout << (pass ? "pass  " : "FAIL  ") << name
                             << (note.empty() ? "" : "  [" + note + "]") << "\n";
    }

    RatVec sample_functional(std::mt19937_64& eng, std::size_t n) {
        for (;;) {
            RatVec f(n);
            bool zero = true;
            for (Rat& x : f) {
                long num = static_cast<long>(eng() % 19) - 9;
                long den = 1 + static_cast<long>(eng() % 3);
                x = Rat(num, den);
                x.canonicalize();
                zero = zero && x == 0;
            }
            if (zero) continue;
            return vec_scale(Rat(1) / dual_norm(f), f);
        }
    }

    int run() {
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const Polyhedron& P = polys[i];
            const std::string& name = files[i];
            record("roundtrip H->V->H " + name, set_equal(P, Polyhedron::from_vrep(P.vrep())));
            record("polar-identity " + name, check_polar_identity(P));
            record("self-distance " + name, hausdorff(P, P).value == ExtRat(Rat(0)));
        }
        std::mt19937_64 eng(seed);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            for (std::size_t j = i + 1; j < polys.size(); ++j) {
                if (polys[i].dim() != polys[j].dim()) continue;
                const std::string tag = files[i] + " vs " + files[j];
                HausdorffResult r = hausdorff(polys[i], polys[j]);
                record("finite iff same component " + tag,
                       r.value.is_finite() == same_component(polys[i], polys[j]));
                record("symmetry " + tag, hausdorff(polys[j], polys[i]).value == r.value);
                if (r.value.is_finite()) {
                    bool bound_ok = true;
                    for (std::size_t k = 0; k < samples; ++k) {
                        RatVec f = sample_functional(eng, polys[i].dim());
                        bound_ok = bound_ok && delta_gap(polys[i], polys[j], f) <= r.value;
                    }
                    for (const Polyhedron* P : {&polys[i], &polys[j]}) {
                        for (const RatVec& row : P->hrep().A.rows) {
                            RatVec f = vec_scale(Rat(1) / dual_norm(row), row);
                            bound_ok = bound_ok && delta_gap(polys[i], polys[j], f) <= r.value;
                        }
                    }
                    record("embedding upper bound " + tag, bound_ok);
                    if (r.separator)
                        record("separator attains " + tag,
                               delta_gap(polys[i], polys[j], *r.separator) == r.value);
                }
                Rat t(static_cast<long>(eng() % 5), 4), t2(static_cast<long>(eng() % 5), 4);
                t.canonicalize();
                t2.canonicalize();
                Rat rr(static_cast<long>(eng() % 7) - 3);
                const Polyhedron& C = polys[(j + 1) % polys.size()];
                OpMetricReport rep = check_operation_metrics(
                    polys[i], polys[j], C.dim() == polys[i].dim() ? C : polys[i], polys[i],
                    polys[j], rr, t, t2);
                record("operation metrics " + tag, rep.all_pass());
            }
        }
        if (json) {
            Json out;
            out["checks"] = checks;
            out["failures"] = failures;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (failures == 0 ? "all checks passed\n"
                                        : std::to_string(failures) + " checks failed\n");
        }
        return failures == 0 ? 0 : 1;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polyhedral calculus in the hyperspace of closed convex sets"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable canonical JSON output");

    std::vector<std::string> files;
    std::string dir_csv, subspace_file, subsets_csv;
    std::string eps_str = "1/2", t_str = "0", t2_str = "1", r_str = "1";
    std::size_t nflag = 6;
    std::size_t samples = 200;
    std::uint64_t seed = 1;

    auto* c_classify = app.add_subcommand("classify", "component type of the input polyhedron");
    c_classify->add_option("file", files)->required()->expected(1);

    auto* c_haus = app.add_subcommand("hausdorff", "exact distance with certificates");
    c_haus->add_option("files", files)->required()->expected(2);

    auto* c_support = app.add_subcommand("support", "support value sup f(P)");
    c_support->add_option("file", files)->required()->expected(1);
    c_support->add_option("--dir", dir_csv, "functional, comma-separated rationals")->required();

    auto* c_dist = app.add_subcommand("dist", "distance from a point to the polyhedron");
    c_dist->add_option("file", files)->required()->expected(1);
    c_dist->add_option("--dir", dir_csv, "point, comma-separated rationals")->required();

    auto* c_convert = app.add_subcommand("convert", "canonical H- and V-representations");
    c_convert->add_option("file", files)->required()->expected(1);

    auto* c_sum = app.add_subcommand("sum", "Minkowski sum");
    c_sum->add_option("files", files)->required()->expected(2);

    auto* c_hull = app.add_subcommand("hull", "closed convex hull of the union");
    c_hull->add_option("files", files)->required()->expected(2);

    auto* c_scale = app.add_subcommand("scale", "pointwise scaling");
    c_scale->add_option("file", files)->required()->expected(1);
    c_scale->add_option("--r", r_str, "scalar p/q");

    auto* c_comb = app.add_subcommand("combine", "convex combination (1-t)P + tQ");
    c_comb->add_option("files", files)->required()->expected(2);
    c_comb->add_option("--t", t_str, "weight in [0,1]");

    auto* c_translate = app.add_subcommand("translate", "translate by a vector");
    c_translate->add_option("file", files)->required()->expected(1);
    c_translate->add_option("--dir", dir_csv, "vector, comma-separated rationals")->required();

    auto* c_quot = app.add_subcommand("quotient", "image under the quotient by a subspace");
    c_quot->add_option("file", files)->required()->expected(1);
    c_quot->add_option("--subspace", subspace_file, "JSON file with {\"basis\": [[...]]}")->required();

    auto* c_recc = app.add_subcommand("recession", "recession cone of the polyhedron");
    c_recc->add_option("file", files)->required()->expected(1);

    auto* c_dual = app.add_subcommand("dual-cone", "generators of the polar of the recession cone");
    c_dual->add_option("file", files)->required()->expected(1);

    auto* c_l31 = app.add_subcommand("lemma31", "polar intersection identity check");
    c_l31->add_option("file", files)->required()->expected(1);

    auto* c_p42 = app.add_subcommand("prop42", "metric identities of the operations");
    c_p42->add_option("files", files, "A B C A' B'")->required()->expected(5);
    c_p42->add_option("--r", r_str, "scaling factor p/q");
    c_p42->add_option("--t", t_str, "first weight");
    c_p42->add_option("--t2", t2_str, "second weight");

    auto* c_wit = app.add_subcommand("witness", "separated family near a pointed cone");
    c_wit->add_option("file", files)->required()->expected(1);
    c_wit->add_option("--eps", eps_str, "epsilon in (0,1), p/q");
    c_wit->add_option("--n", nflag, "largest index N (members C_0..C_N)");

    auto* c_bio = app.add_subcommand("biorth", "biorthogonal hull family on coordinate vectors");
    c_bio->add_option("--n", nflag, "ambient dimension")->required();
    c_bio->add_option("--subsets", subsets_csv, "index sets, e.g. \"1,2;3;1,3\" (default: all)");

    auto* c_all = app.add_subcommand("verify-all", "run the invariant suite over the inputs");
    c_all->add_option("files", files)->required()->expected(-2);
    c_all->add_option("--samples", samples, "random dual-sphere directions per pair");
    c_all->add_option("--seed", seed, "sampling seed");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_classify) {
            Polyhedron P = load_polyhedron(files[0]);
            ComponentClass c = classify(P);
            std::string human = std::string("tag: ") + component_tag_name(c.tag) + "\nspace: " +
                                component_space_label(c.tag) + "\nclause: Theorem 1(" +
                                std::to_string(c.clause) + ")\ncodim_lineality: " +
                                std::to_string(c.codim_lineality) + "\ndetail: " + c.detail + "\n";
            emit(component_to_json(c), as_json, human);
        } else if (*c_haus) {
            Polyhedron A = load_polyhedron(files[0]);
            Polyhedron B = load_polyhedron(files[1]);
            HausdorffResult r = hausdorff(A, B);
            std::string human = "value: " + r.value.str() + "\n";
            if (r.witness_point)
                human += std::string("witness: ") + vec_to_string(*r.witness_point) + " (" +
                         side_name(r.witness_side) + ")\n";
            if (r.separator) human += "separator: " + vec_to_string(*r.separator) + "\n";
            if (r.failing_direction)
                human += "failing direction: " + vec_to_string(*r.failing_direction) + " (" +
                         side_name(r.failing_side) + ")\n";
            emit(hausdorff_to_json(r), as_json, human);
        } else if (*c_support) {
            Polyhedron P = load_polyhedron(files[0]);
            ExtRat s = support(P, parse_dir(dir_csv));
            Json j;
            j["value"] = s.str();
            emit(j, as_json, "support: " + s.str() + "\n");
        } else if (*c_dist) {
            Polyhedron P = load_polyhedron(files[0]);
            DistCertificate c = dist_point_certified(P, parse_dir(dir_csv));
            Json j;
            j["value"] = rat_to_string(c.value);
            j["nearest"] = rat_vec_to_json(c.nearest);
            j["separator"] = rat_vec_to_json(c.separator);
            emit(j, as_json,
                 "dist: " + rat_to_string(c.value) + "\nnearest: " + vec_to_string(c.nearest) + "\n");
        } else if (*c_convert) {
            Polyhedron P = load_polyhedron(files[0]);
            emit(polyhedron_to_json(P, true, true), as_json, poly_summary(P));
        } else if (*c_sum) {
            Polyhedron R = minkowski_sum(load_polyhedron(files[0]), load_polyhedron(files[1]));
            emit(polyhedron_to_json(R, false, true), as_json, poly_summary(R));
        } else if (*c_hull) {
            Polyhedron R = hull_union(load_polyhedron(files[0]), load_polyhedron(files[1]));
            emit(polyhedron_to_json(R, false, true), as_json, poly_summary(R));
        } else if (*c_scale) {
            Polyhedron R = scale(load_polyhedron(files[0]), rat_from_string(r_str));
            emit(polyhedron_to_json(R, false, true), as_json, poly_summary(R));
        } else if (*c_comb) {
            Polyhedron R = convex_combination(load_polyhedron(files[0]), load_polyhedron(files[1]),
                                              rat_from_string(t_str));
            emit(polyhedron_to_json(R, false, true), as_json, poly_summary(R));
        } else if (*c_translate) {
            Polyhedron R = translate(load_polyhedron(files[0]), parse_dir(dir_csv));
            emit(polyhedron_to_json(R, false, true), as_json, poly_summary(R));
        } else if (*c_quot) {
            Polyhedron P = load_polyhedron(files[0]);
            QuotientMap q = make_quotient_map(load_subspace_basis(subspace_file, P.dim()), P.dim());
            Polyhedron R = quotient(P, q);
            emit(polyhedron_to_json(R, false, true), as_json, poly_summary(R));
        } else if (*c_recc) {
            PolyCone V = recession_cone(load_polyhedron(files[0]));
            std::string human = "generators:\n";
            for (const RatVec& g : V.generators) human += "  " + vec_to_string(g) + "\n";
            human += "lineality:\n";
            for (const RatVec& l : V.lineality) human += "  " + vec_to_string(l) + "\n";
            emit(cone_to_json(V), as_json, human);
        } else if (*c_dual) {
            PolyCone V = recession_cone(load_polyhedron(files[0]));
            std::vector<RatVec> gens = dual_cone_generators(V);
            Json arr = Json::array();
            std::string human = "polar generators:\n";
            for (const RatVec& g : gens) {
                arr.push_back(rat_vec_to_json(g));
                human += "  " + vec_to_string(g) + "\n";
            }
            Json j;
            j["generators"] = std::move(arr);
            emit(j, as_json, human);
        } else if (*c_l31) {
            bool ok = check_polar_identity(load_polyhedron(files[0]));
            Json j;
            j["pass"] = ok;
            emit(j, as_json, std::string(ok ? "pass" : "FAIL") + "\n");
            if (!ok) return 1;
        } else if (*c_p42) {
            OpMetricReport rep = check_operation_metrics(
                load_polyhedron(files[0]), load_polyhedron(files[1]), load_polyhedron(files[2]),
                load_polyhedron(files[3]), load_polyhedron(files[4]), rat_from_string(r_str),
                rat_from_string(t_str), rat_from_string(t2_str));
            std::string human;
            for (const ClauseCheck& c : rep.clauses) {
                human += "clause " + std::to_string(c.id) + ": ";
                if (!c.applicable)
                    human += "skipped (" + c.note + ")\n";
                else
                    human += std::string(c.pass ? "pass" : "FAIL") + "  lhs=" + c.lhs +
                             " rhs=" + c.rhs + "\n";
            }
            emit(op_metric_report_to_json(rep), as_json, human);
            if (!rep.all_pass()) return 1;
        } else if (*c_wit) {
            Polyhedron P = load_polyhedron(files[0]);
            PolyCone V = recession_cone(P);
            WitnessFamily w = witness_family(V, rat_from_string(eps_str), nflag);
            WitnessReport rep = verify_witness(w);
            Json j;
            j["family"] = witness_family_to_json(w);
            j["report"] = witness_report_to_json(rep);
            std::string human = "delta: " + rat_to_string(w.delta) + "\n";
            for (const auto& row : rep.members)
                human += "n=" + std::to_string(row.n) + "  d(C_n, V)=" +
                         rat_to_string(row.dist_to_cone) + "  <= eps: " +
                         (row.within_epsilon ? "yes" : "NO") + "\n";
            for (const auto& row : rep.pairs)
                human += "n=" + std::to_string(row.n) + " m=" + std::to_string(row.m) + "  d=" +
                         rat_to_string(row.dist) + "  >= delta: " + (row.separated ? "yes" : "NO") +
                         "\n";
            emit(j, as_json, human);
            if (!rep.all_pass()) return 1;
        } else if (*c_bio) {
            auto subsets = subsets_csv.empty() ? all_subsets(nflag) : parse_subsets(subsets_csv);
            BiorthFamily fam = biorthogonal_family(nflag, subsets);
            Rat min_d = pairwise_min_hausdorff(fam.members);
            Json j;
            j["bound"] = rat_to_string(fam.bound);
            j["min_pairwise_distance"] = rat_to_string(min_d);
            j["separated"] = min_d >= fam.bound;
            Json members = Json::array();
            for (const Polyhedron& m : fam.members) members.push_back(polyhedron_to_json(m, false, true));
            j["members"] = std::move(members);
            std::string human = "members: " + std::to_string(fam.members.size()) +
                                "\nmin pairwise distance: " + rat_to_string(min_d) +
                                "\nbound: " + rat_to_string(fam.bound) + "\n";
            emit(j, as_json, human);
            if (min_d < fam.bound) return 1;
        } else if (*c_all) {
            VerifyAll v;
            v.files = files;
            v.samples = samples;
            v.seed = seed;
            v.json = as_json;
            for (const std::string& f : files) v.polys.push_back(load_polyhedron(f));
            return v.run();
        }
    } catch (const Error& e) {
        std::cerr << e.summary() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal msg=\"" << e.what() << "\"\n";
        return 1;
    }
    return 0;
}
