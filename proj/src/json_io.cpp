#include "hausconv/json_io.hpp"

#include <fstream>

namespace hausconv {

namespace {

Rat rat_from_json(const Json& j, const std::string& file, long index) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, e.what(), file, index);
        }
    throw Error(ErrorCode::ParseError, "expected rational string", file, index);
}

std::vector<RatVec> vec_list_from_json(const Json& j, std::size_t dim, const std::string& file,
                                       const char* what) {
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an array", file);
    std::vector<RatVec> out;
    long idx = 0;
    for (const Json& row : j) {
        RatVec v = rat_vec_from_json(row, dim, file);
        out.push_back(std::move(v));
        ++idx;
    }
    return out;
}

}  // namespace

Json rat_vec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

RatVec rat_vec_from_json(const Json& j, std::size_t expect_dim, const std::string& file) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a vector (array)", file);
    RatVec v;
    long idx = 0;
    for (const Json& x : j) v.push_back(rat_from_json(x, file, idx++));
    if (expect_dim != 0 && v.size() != expect_dim)
        throw Error(ErrorCode::DimensionMismatch,
                    "vector has length " + std::to_string(v.size()) + ", expected " +
                        std::to_string(expect_dim),
                    file);
    return v;
}

Json polyhedron_to_json(const Polyhedron& p, bool with_hrep, bool with_vrep) {
    Json j;
    j["dim"] = p.dim();
    if (with_hrep) {
        const HRep& h = p.hrep();
        Json jh;
        Json rows = Json::array();
        for (const RatVec& r : h.A.rows) rows.push_back(rat_vec_to_json(r));
        jh["A"] = std::move(rows);
        jh["b"] = rat_vec_to_json(h.b);
        j["hrep"] = std::move(jh);
    }
    if (with_vrep) {
        const VRep& v = p.vrep();
        Json jv;
        Json verts = Json::array(), rays = Json::array(), lin = Json::array();
        for (const RatVec& x : v.vertices) verts.push_back(rat_vec_to_json(x));
        for (const RatVec& x : v.rays) rays.push_back(rat_vec_to_json(x));
        for (const RatVec& x : v.lineality) lin.push_back(rat_vec_to_json(x));
        jv["vertices"] = std::move(verts);
        jv["rays"] = std::move(rays);
        jv["lineality"] = std::move(lin);
        j["vrep"] = std::move(jv);
    }
    return j;
}

Polyhedron polyhedron_from_json(const Json& j, const std::string& file) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "polyhedron must be a JSON object", file);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw Error(ErrorCode::ParseError, "missing or invalid \"dim\"", file);
    const std::size_t n = j["dim"].get<std::size_t>();
    if (n == 0) throw Error(ErrorCode::ParseError, "ambient dimension must be >= 1", file);

    std::optional<HRep> h;
    std::optional<VRep> v;
    if (j.contains("hrep")) {
        const Json& jh = j["hrep"];
        if (!jh.is_object() || !jh.contains("A") || !jh.contains("b"))
            throw Error(ErrorCode::ParseError, "hrep needs \"A\" and \"b\"", file);
        HRep rep;
        rep.dim = n;
        rep.A = RatMat(0, n);
        long idx = 0;
        for (const Json& row : jh["A"]) {
            try {
                rep.A.append_row(rat_vec_from_json(row, n, file));
            } catch (const Error& e) {
                throw Error(e.code(), e.what(), file, idx);
            }
            ++idx;
        }
        rep.b = rat_vec_from_json(jh["b"], 0, file);
        if (rep.b.size() != rep.A.nrows)
            throw Error(ErrorCode::DimensionMismatch, "hrep: |b| differs from the number of rows",
                        file);
        h = std::move(rep);
    }
    if (j.contains("vrep")) {
        const Json& jv = j["vrep"];
        if (!jv.is_object())
            throw Error(ErrorCode::ParseError, "vrep must be an object", file);
        VRep rep;
        rep.dim = n;
        if (jv.contains("vertices"))
            rep.vertices = vec_list_from_json(jv["vertices"], n, file, "vertices");
        if (jv.contains("rays")) rep.rays = vec_list_from_json(jv["rays"], n, file, "rays");
        if (jv.contains("lineality"))
            rep.lineality = vec_list_from_json(jv["lineality"], n, file, "lineality");
        v = std::move(rep);
    }
    if (!h && !v)
        throw Error(ErrorCode::ParseError, "polyhedron needs an \"hrep\" or a \"vrep\"", file);

    try {
        if (h && v) {
            Polyhedron ph = Polyhedron::from_hrep(*h);
            Polyhedron pv = Polyhedron::from_vrep(std::move(*v));
            if (!set_equal(ph, pv))
                throw Error(ErrorCode::ParseError, "reps inconsistent", file);
            return Polyhedron::from_trusted(std::move(h), pv.vrep());
        }
        if (h) return Polyhedron::from_hrep(std::move(*h));
        return Polyhedron::from_vrep(std::move(*v));
    } catch (const Error& e) {
        if (e.file().empty()) throw Error(e.code(), e.what(), file, e.index());
        throw;
    }
}

Polyhedron load_polyhedron(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open file", path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what(), path);
    }
    return polyhedron_from_json(j, path);
}

std::vector<RatVec> load_subspace_basis(const std::string& path, std::size_t expect_dim) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open file", path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what(), path);
    }
    if (!j.is_object() || !j.contains("basis"))
        throw Error(ErrorCode::ParseError, "subspace file needs a \"basis\" array", path);
    return vec_list_from_json(j["basis"], expect_dim, path, "basis");
}

Json hausdorff_to_json(const HausdorffResult& r) {
    Json j;
    j["value"] = r.value.str();
    if (r.witness_point) {
        j["witness"] = rat_vec_to_json(*r.witness_point);
        j["side"] = side_name(r.witness_side);
    }
    if (r.separator) j["separator"] = rat_vec_to_json(*r.separator);
    j["attained"] = r.attained;
    if (r.failing_direction) {
        j["failing_direction"] = rat_vec_to_json(*r.failing_direction);
        j["failing_side"] = side_name(r.failing_side);
    }
    return j;
}

Json component_to_json(const ComponentClass& c) {
    Json j;
    j["tag"] = component_tag_name(c.tag);
    j["codim_lineality"] = c.codim_lineality;
    j["clause"] = "Theorem 1(" + std::to_string(c.clause) + ")";
    j["detail"] = c.detail;
    j["space"] = component_space_label(c.tag);
    return j;
}

Json cone_to_json(const PolyCone& c) {
    Json j;
    j["dim"] = c.dim;
    Json rows = Json::array();
    for (const RatVec& r : c.hrep_rows.rows) rows.push_back(rat_vec_to_json(r));
    j["hrep_rows"] = std::move(rows);
    Json gens = Json::array(), lin = Json::array();
    for (const RatVec& g : c.generators) gens.push_back(rat_vec_to_json(g));
    for (const RatVec& l : c.lineality) lin.push_back(rat_vec_to_json(l));
    j["generators"] = std::move(gens);
    j["lineality"] = std::move(lin);
    return j;
}

Json op_metric_report_to_json(const OpMetricReport& r) {
    Json arr = Json::array();
    for (const ClauseCheck& c : r.clauses) {
        Json j;
        j["clause"] = c.id;
        j["applicable"] = c.applicable;
        if (c.applicable) {
            j["lhs"] = c.lhs;
            j["rhs"] = c.rhs;
            j["pass"] = c.pass;
        }
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(std::move(j));
    }
    Json out;
    out["clauses"] = std::move(arr);
    out["all_pass"] = r.all_pass();
    return out;
}

Json witness_family_to_json(const WitnessFamily& w) {
    Json j;
    j["epsilon"] = rat_to_string(w.epsilon);
    j["delta"] = rat_to_string(w.delta);
    j["h"] = rat_vec_to_json(w.h);
    j["f"] = rat_vec_to_json(w.f);
    j["x"] = rat_vec_to_json(w.x);
    j["y"] = rat_vec_to_json(w.y);
    j["cone"] = cone_to_json(w.cone);
    Json members = Json::array();
    for (const Polyhedron& m : w.members) members.push_back(polyhedron_to_json(m, false, true));
    j["members"] = std::move(members);
    return j;
}

Json witness_report_to_json(const WitnessReport& r) {
    Json j;
    j["epsilon"] = rat_to_string(r.epsilon);
    j["delta"] = rat_to_string(r.delta);
    j["identities"] = r.identities_ok;
    Json members = Json::array();
    for (const auto& row : r.members) {
        Json m;
        m["n"] = row.n;
        m["dist_to_cone"] = rat_to_string(row.dist_to_cone);
        m["within_epsilon"] = row.within_epsilon;
        members.push_back(std::move(m));
    }
    j["members"] = std::move(members);
    Json pairs = Json::array();
    for (const auto& row : r.pairs) {
        Json p;
        p["n"] = row.n;
        p["m"] = row.m;
        p["dist"] = rat_to_string(row.dist);
        p["separated"] = row.separated;
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    j["all_pass"] = r.all_pass();
    return j;
}

}  // namespace hausconv
