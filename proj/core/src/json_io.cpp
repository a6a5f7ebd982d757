#include "lzeta/json_io.hpp"

#include <json.hpp>

namespace lzeta {

namespace {

using ojson = nlohmann::ordered_json;

ojson jv(LatticePoint p) { return ojson::array({p.i, p.j}); }
ojson jv(LatticeVector v) { return ojson::array({v.x, v.y}); }

ojson jv(const Face& f) {
    ojson o;
    o["dim"] = f.dim;
    o["vertices"] = ojson::array();
    for (const LatticePoint& v : f.vertices) o["vertices"].push_back(jv(v));
    if (f.inward_normal) o["normal"] = jv(*f.inward_normal);
    return o;
}

ojson jv(const NewtonPolytope& P) {
    ojson o;
    o["vertices"] = ojson::array();
    for (const LatticePoint& v : P.vertices) o["vertices"].push_back(jv(v));
    o["edges"] = ojson::array();
    for (const Face& e : P.edges) {
        ojson eo;
        eo["v"] = jv(e.vertices[0]);
        eo["w"] = jv(e.vertices[1]);
        eo["normal"] = jv(*e.inward_normal);
        o["edges"].push_back(eo);
    }
    return o;
}

ojson cone_json(const Cone& c) {
    ojson o;
    o["gens"] = ojson::array();
    for (LatticeVector g : c.gens) o["gens"].push_back(jv(g));
    o["face"] = jv(c.face);
    o["fundamental_points"] = ojson::array();
    for (const LatticePoint& h : fundamental_points(c))
        o["fundamental_points"].push_back(jv(h));
    return o;
}

ojson fan_like_json(const std::vector<LatticeVector>& rays, const std::vector<Cone>& cones) {
    ojson o;
    o["rays"] = ojson::array();
    for (LatticeVector r : rays) o["rays"].push_back(jv(r));
    o["cones"] = ojson::array();
    for (const Cone& c : cones) o["cones"].push_back(cone_json(c));
    return o;
}

ojson jv(const NondegeneracyReport& rep) {
    ojson o;
    o["p"] = rep.p;
    o["overall"] = rep.overall;
    o["entries"] = ojson::array();
    for (const FaceCheckEntry& e : rep.entries) {
        ojson eo;
        eo["label"] = e.label;
        eo["face"] = jv(e.face);
        eo["cleared"] = e.cleared.to_string();
        eo["degenerate"] = e.degenerate;
        if (e.witness) eo["witness"] = ojson::array({e.witness->x, e.witness->y});
        o["entries"].push_back(eo);
    }
    return o;
}

ojson coeff_json(const BigInt& z) {
    if (z.fits_slong_p()) return ojson(z.get_si());
    return ojson(z.get_str());
}

ojson jv(const QTLaurent& f) {
    ojson arr = ojson::array();
    for (const auto& [e, c] : f.terms())
        arr.push_back(ojson::array(
            {e.eq, e.et, coeff_json(BigInt(c.get_num())), coeff_json(BigInt(c.get_den()))}));
    return arr;
}

ojson jv(const ZetaTerm& t) {
    ojson o;
    o["label"] = t.label;
    o["numerator"] = jv(t.num);
    o["denominator"] = ojson::array();
    for (const DenomFactor& f : t.factors) {
        ojson fo;
        fo["kind"] = f.kind == DenomFactor::Kind::unit_factor ? "unit" : "cone-ray";
        fo["norm"] = f.norm;
        fo["d"] = f.d;
        o["denominator"].push_back(fo);
    }
    if (!t.q_factors.empty()) {
        o["q_denominator"] = ojson::array();
        for (const auto& [k, mult] : t.q_factors)
            o["q_denominator"].push_back(ojson::array({k, mult}));
    }
    if (t.n_count) o["N"] = *t.n_count;
    o["text"] = t.to_string();
    return o;
}

ojson jv(const ZetaFunction& Z) {
    ojson o;
    o["prime"] = Z.p;
    o["polynomial"] = Z.poly_text;
    o["N0"] = Z.N0;
    o["terms"] = ojson::array();
    for (const ZetaTerm& t : Z.terms) o["terms"].push_back(jv(t));
    o["cones"] = ojson::array();
    for (const auto& d : Z.details) {
        ojson co;
        co["gens"] = ojson::array();
        for (LatticeVector g : d.cone.gens) co["gens"].push_back(jv(g));
        co["face"] = d.cone.face.name();
        co["N"] = d.N;
        co["L"] = d.L.to_string();
        co["S"] = d.S.to_string();
        o["cones"].push_back(co);
    }
    return o;
}

ojson jv(const std::vector<PoleData>& poles) {
    ojson arr = ojson::array();
    for (const PoleData& pd : poles) {
        ojson o;
        o["real_part"] = to_string(pd.real_part);
        o["d"] = pd.d;
        o["source"] = pd.source;
        arr.push_back(o);
    }
    return arr;
}

ojson jv(const Band& band) {
    ojson o;
    o["beta"] = to_string(band.beta);
    if (band.alpha)
        o["alpha"] = to_string(*band.alpha);
    else
        o["alpha"] = nullptr;
    return o;
}

ojson jv(const IntegralEstimate& est) {
    ojson o;
    o["value"] = est.value;
    o["error_bound"] = est.error_bound;
    o["p"] = est.p;
    o["s"] = est.s;
    o["M"] = est.truncation;
    o["depth"] = est.depth;
    o["min_val"] = ojson::array({est.min_m, est.min_n});
    o["resolved_mass"] = est.resolved_mass;
    o["tail_bound"] = est.tail_bound;
    return o;
}

std::string dump(const ojson& o, int indent) { return o.dump(indent); }

}  // namespace

std::string polytope_json(const NewtonPolytope& P, int indent) { return dump(jv(P), indent); }

std::string partition_json(const ConicalPartition& part, int indent) {
    return dump(fan_like_json(part.rays, part.cones), indent);
}

std::string fan_json(const SimpleFan& fan, int indent) {
    return dump(fan_like_json(fan.rays, fan.maximal_cones), indent);
}

std::string report_json(const NondegeneracyReport& rep, int indent) {
    return dump(jv(rep), indent);
}

std::string zeta_json(const ZetaFunction& Z, int indent) { return dump(jv(Z), indent); }

std::string estimate_json(const IntegralEstimate& est, int indent) {
    return dump(jv(est), indent);
}

std::string pipeline_json(const PipelineData& data, int indent) {
    ojson o;
    if (data.zeta) {
        o["polynomial"] = data.zeta->poly_text;
        o["prime"] = data.zeta->p;
        o["polytope"] = jv(data.zeta->polytope);
        o["partition"] = fan_like_json(data.zeta->partition.rays, data.zeta->partition.cones);
    }
    if (data.fan) o["simple_fan"] = fan_like_json(data.fan->rays, data.fan->maximal_cones);
    if (data.classes) {
        ojson c;
        c["normals"] = ojson::array();
        for (LatticeVector v : data.classes->normals) c["normals"].push_back(jv(v));
        c["axes"] = ojson::array();
        for (LatticeVector v : data.classes->axes) c["axes"].push_back(jv(v));
        c["extras"] = ojson::array();
        for (LatticeVector v : data.classes->extras) c["extras"].push_back(jv(v));
        o["generator_classes"] = c;
    }
    if (data.weak) o["nondegeneracy"] = jv(*data.weak);
    if (data.khovanskii) o["khovanskii"] = jv(*data.khovanskii);
    if (data.zeta) o["zeta"] = jv(*data.zeta);
    ojson poles;
    poles["partition"] = jv(data.poles_partition);
    if (data.fan) poles["simple_fan"] = jv(data.poles_fan);
    o["candidate_poles"] = poles;
    ojson band;
    band["partition"] = jv(data.band_partition);
    if (data.fan) band["simple_fan"] = jv(data.band_fan);
    o["band"] = band;
    return dump(o, indent);
}

}  // namespace lzeta
