#include "exactlab/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "exactlab/rational.hpp"

namespace exactlab {

namespace {

Rational rational_from_entry(const Json& e) {
    if (e.is_number_integer()) return Rational(e.get<long>());
    if (e.is_string()) return rational_from_string(e.get<std::string>());
    throw std::invalid_argument("matrix entry must be an integer or a rational string");
}

}  // namespace

Json json_of_matrix(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
        throw std::invalid_argument("matrix object needs 'rows', 'cols', 'entries'");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.value("entries", Json::array());
    if (entries.size() != rows)
        throw std::invalid_argument("matrix entry row count does not match 'rows'");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols)
            throw std::invalid_argument("matrix entry column count does not match 'cols'");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_entry(entries[i][c]);
    }
    return m;
}

Json json_of_rep(const Rep& rep) {
    Json maps = Json::object();
    for (std::size_t a = 0; a < rep.quiver.arrows.size(); ++a)
        maps[rep.quiver.arrows[a].name] = json_of_matrix(rep.arrow_maps[a]);
    return Json{{"dims", rep.dims}, {"maps", std::move(maps)}};
}

Rep rep_from_json(const Quiver& q, const Json& j) {
    Rep rep;
    rep.quiver = q;
    if (!j.is_object() || !j.contains("dims"))
        throw std::invalid_argument("representation object needs 'dims' and 'maps'");
    rep.dims = j.at("dims").get<std::vector<int>>();
    if (static_cast<int>(rep.dims.size()) != q.vertex_count)
        throw std::invalid_argument("'dims' length does not match the vertex count");
    const Json maps = j.value("maps", Json::object());
    for (const Arrow& a : q.arrows) {
        if (!maps.contains(a.name))
            throw std::invalid_argument("missing matrix for arrow '" + a.name + "'");
        rep.arrow_maps.push_back(matrix_from_json(maps.at(a.name)));
    }
    validate_rep(rep);
    return rep;
}

Json json_of_indecs(const ARQuiver& ar) {
    Json out = Json::array();
    for (int i = 0; i < ar.count(); ++i) {
        const Indec& m = ar.indec(i);
        Json entry{{"id", m.id},
                   {"dims", m.rep.dims},
                   {"projective", m.is_projective},
                   {"injective", m.is_injective}};
        const std::optional<int> t = ar.tau(i);
        entry["tau"] = t ? Json(ar.indec(*t).id) : Json(nullptr);
        out.push_back(std::move(entry));
    }
    return out;
}

Json json_of_closed_set(const ARQuiver& ar, const std::vector<int>& closed_set) {
    Json out = Json::array();
    for (int i : closed_set) out.push_back(ar.indec(i).id);
    return out;
}

Json json_of_structure(const ARQuiver& ar, const ExactStructure& e) {
    Json gens = Json::array();
    for (const Conflation& c : e.generators)
        gens.push_back(Json{{"start_dims", c.inflation.source.dims},
                            {"middle_dims", c.inflation.target.dims},
                            {"end_dims", c.deflation.target.dims}});
    return Json{{"closed_set", json_of_closed_set(ar, e.closed_set)},
                {"generators", std::move(gens)}};
}

Json json_of_ideal(const Ideal& ideal) {
    const ARQuiver& ar = ideal.ar();
    Json out = Json::object();
    for (int i = 0; i < ar.count(); ++i)
        for (int j = 0; j < ar.count(); ++j) {
            const Subspace& s = ideal.at(i, j);
            if (s.dim() == 0) continue;
            out["pair:(" + ar.indec(i).id + "," + ar.indec(j).id + ")"] =
                json_of_matrix(s.basis());
        }
    return out;
}

Json json_of_kclosed(const KClosedSet& set) {
    Json finite = Json::array();
    for (const KPoint& p : set.finite_points) finite.push_back(to_string(p));
    Json prufer = Json::array();
    for (const KLabel& l : set.prufer_labels) prufer.push_back(to_string(l));
    Json adic = Json::array();
    for (const KLabel& l : set.adic_labels) adic.push_back(to_string(l));
    return Json{{"finite", std::move(finite)},
                {"prufer", std::move(prufer)},
                {"adic", std::move(adic)},
                {"generic", set.generic}};
}

Conflation conflation_from_json(const Quiver& q, const Json& j) {
    for (const char* key : {"start", "middle", "end", "inflation", "deflation"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("conflation object needs '") + key + "'");
    const Rep start = rep_from_json(q, j.at("start"));
    const Rep middle = rep_from_json(q, j.at("middle"));
    const Rep end = rep_from_json(q, j.at("end"));
    const auto read_components = [&](const Json& arr, const Rep& src, const Rep& tgt) {
        if (!arr.is_array() || static_cast<int>(arr.size()) != q.vertex_count)
            throw std::invalid_argument("morphism needs one matrix per vertex");
        MorphismRep f{src, tgt, {}};
        for (const Json& m : arr) f.components.push_back(matrix_from_json(m));
        if (!is_valid_morphism(f))
            throw std::invalid_argument("matrices do not define a morphism");
        return f;
    };
    Conflation c{read_components(j.at("inflation"), start, middle),
                 read_components(j.at("deflation"), middle, end)};
    if (!is_kernel_cokernel_pair(c.inflation, c.deflation))
        throw std::invalid_argument("the given pair is not a kernel-cokernel pair");
    return c;
}

Json json_of_conflation(const Conflation& c) {
    const auto components = [](const MorphismRep& f) {
        Json arr = Json::array();
        for (const Matrix& m : f.components) arr.push_back(json_of_matrix(m));
        return arr;
    };
    return Json{{"start", json_of_rep(c.inflation.source)},
                {"middle", json_of_rep(c.inflation.target)},
                {"end", json_of_rep(c.deflation.target)},
                {"inflation", components(c.inflation)},
                {"deflation", components(c.deflation)}};
}

std::string ar_quiver_dot(const ARQuiver& ar) {
    std::ostringstream out;
    out << "digraph AR {\n  rankdir=LR;\n  node [shape=box];\n";
    for (int i = 0; i < ar.count(); ++i) {
        const Indec& m = ar.indec(i);
        out << "  " << m.id << " [label=\"" << m.id << " (";
        for (std::size_t v = 0; v < m.rep.dims.size(); ++v)
            out << (v ? "," : "") << m.rep.dims[v];
        out << ")\"];\n";
    }
    for (const ARArrowInfo& a : ar.arrows())
        out << "  " << ar.indec(a.source).id << " -> " << ar.indec(a.target).id << ";\n";
    for (int i = 0; i < ar.count(); ++i)
        if (const std::optional<int> t = ar.tau(i))
            out << "  " << ar.indec(i).id << " -> " << ar.indec(*t).id
                << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

}  // namespace exactlab
