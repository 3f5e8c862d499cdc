#include "exactlab/ar_quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactlab {

namespace {

/// All paths out of `start`, grouped by end vertex; each path is the list of
/// its arrow indices. Breadth-first and arrow-index order, so the basis
/// ordering of every path space is deterministic.
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int start) {
    std::vector<std::vector<std::vector<int>>> by_end(q.vertex_count);
    std::vector<std::pair<int, std::vector<int>>> queue = {{start, {}}};
    std::size_t head = 0;
    while (head < queue.size()) {
        const auto [end, path] = queue[head++];
        by_end[end].push_back(path);
        for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
            if (q.arrows[ai].source == end) {
                std::vector<int> longer = path;
                longer.push_back(static_cast<int>(ai));
                queue.push_back({q.arrows[ai].target, longer});
            }
    }
    return by_end;
}

int path_index(const std::vector<std::vector<int>>& paths, const std::vector<int>& p) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == p) return static_cast<int>(i);
    throw std::logic_error("path table is not closed under extension");
}

Rep rep_from_paths(const Quiver& q, const std::vector<std::vector<std::vector<int>>>& paths) {
    Rep m;
    m.quiver = q;
    for (int v = 0; v < q.vertex_count; ++v)
        m.dims.push_back(static_cast<int>(paths[v].size()));
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        Matrix map = Matrix::zero(m.dims[a.target], m.dims[a.source]);
        for (std::size_t col = 0; col < paths[a.source].size(); ++col) {
            std::vector<int> extended = paths[a.source][col];
            extended.push_back(static_cast<int>(ai));
            map.at(path_index(paths[a.target], extended), col) = 1;
        }
        m.arrow_maps.push_back(map);
    }
    return m;
}

}  // namespace

Rep projective_rep(const Quiver& q, int vertex) {
    if (vertex < 0 || vertex >= q.vertex_count)
        throw std::invalid_argument("projective_rep: vertex out of range");
    return rep_from_paths(q, paths_from(q, vertex));
}

Rep injective_rep(const Quiver& q, int vertex) {
    if (vertex < 0 || vertex >= q.vertex_count)
        throw std::invalid_argument("injective_rep: vertex out of range");
    return matlis_dual_rep(projective_rep(opposite(q), vertex));
}

int positive_root_count(const std::string& type_label) {
    if (type_label.empty()) throw std::invalid_argument("empty type label");
    const int n = std::stoi(type_label.substr(1));
    switch (type_label[0]) {
        case 'A':
            return n * (n + 1) / 2;
        case 'D':
            return n * (n - 1);
        case 'E':
            if (n == 6) return 36;
            if (n == 7) return 63;
            if (n == 8) return 120;
            break;
    }
    throw std::invalid_argument("unrecognized Dynkin label: " + type_label);
}

ARQuiver ARQuiver::knit(const Quiver& q) {
    const GraphType type = classify_graph(q);
    if (!type.is_dynkin)
        throw std::invalid_argument("algebra is not representation-finite: underlying graph is " +
                                    type.label);

    ARQuiver ar;
    ar.quiver_ = q;
    ar.type_label_ = type.label;

    // Injective dim vectors, used to flag injectives as they appear.
    std::vector<std::vector<int>> injective_dims;
    for (int v = 0; v < q.vertex_count; ++v) injective_dims.push_back(injective_rep(q, v).dims);

    ar.projective_of_vertex_.assign(q.vertex_count, -1);
    ar.injective_of_vertex_.assign(q.vertex_count, -1);

    auto add_indec = [&](const Rep& rep, int projective_vertex) -> int {
        const int index = static_cast<int>(ar.indecs_.size());
        Indec m;
        m.id = "m" + std::to_string(index);
        m.rep = rep;
        m.is_projective = projective_vertex >= 0;
        m.projective_vertex = projective_vertex;
        for (int v = 0; v < q.vertex_count; ++v)
            if (rep.dims == injective_dims[v]) {
                m.is_injective = true;
                m.injective_vertex = v;
                ar.injective_of_vertex_[v] = index;
            }
        if (!ar.index_by_dims_.emplace(rep.dims, index).second)
            throw std::logic_error("knitting produced a repeated dim vector");
        ar.indecs_.push_back(std::move(m));
        ar.tau_.push_back(std::nullopt);
        ar.tau_inverse_.push_back(std::nullopt);
        ar.sequence_of_start_.push_back(std::nullopt);
        ar.sequence_of_end_.push_back(std::nullopt);
        return index;
    };

    // Projectives are discovered sources-first so that ids follow the
    // knitting direction of the quiver.
    const std::vector<int> vertex_order = topological_order(q);
    for (int v : vertex_order) ar.projective_of_vertex_[v] = add_indec(projective_rep(q, v), v);

    std::vector<std::vector<int>> in_arrows(ar.indecs_.size());
    std::vector<std::vector<int>> out_arrows(ar.indecs_.size());

    auto add_arrow = [&](int source, int target, MorphismRep map) {
        const int id = static_cast<int>(ar.arrows_.size());
        ar.arrows_.push_back({source, target, std::move(map)});
        out_arrows[source].push_back(id);
        in_arrows[target].push_back(id);
    };

    // rad P(v) = (+) P(u) over arrows v -> u; each inclusion prepends the
    // arrow to a path and is an irreducible map P(u) -> P(v).
    for (int v : vertex_order) {
        const auto paths_v = paths_from(q, v);
        for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
            if (q.arrows[ai].source != v) continue;
            const int u = q.arrows[ai].target;
            const auto paths_u = paths_from(q, u);
            const Rep& pu = ar.indecs_[ar.projective_of_vertex_[u]].rep;
            const Rep& pv = ar.indecs_[ar.projective_of_vertex_[v]].rep;
            MorphismRep incl = zero_morphism(pu, pv);
            for (int w = 0; w < q.vertex_count; ++w)
                for (std::size_t col = 0; col < paths_u[w].size(); ++col) {
                    std::vector<int> prefixed = {static_cast<int>(ai)};
                    prefixed.insert(prefixed.end(), paths_u[w][col].begin(), paths_u[w][col].end());
                    incl.components[w].at(path_index(paths_v[w], prefixed), col) = 1;
                }
            add_arrow(ar.projective_of_vertex_[u], ar.projective_of_vertex_[v], incl);
        }
    }

    // Knit: a non-injective X is ready once every irreducible map out of it
    // is known, i.e. every non-injective W with an arrow W -> X has been
    // completed to its mesh. Ready modules are processed in lexicographic
    // dim-vector order.
    while (true) {
        int next = -1;
        for (int i = 0; i < static_cast<int>(ar.indecs_.size()); ++i) {
            if (ar.indecs_[i].is_injective || ar.tau_inverse_[i]) continue;
            bool ready = true;
            for (int aid : in_arrows[i]) {
                const int w = ar.arrows_[aid].source;
                if (!ar.indecs_[w].is_injective && !ar.tau_inverse_[w]) ready = false;
            }
            if (!ready) continue;
            if (next < 0 || ar.indecs_[i].rep.dims < ar.indecs_[next].rep.dims) next = i;
        }
        if (next < 0) break;

        const std::vector<int> mesh_arrows = out_arrows[next];
        std::vector<Rep> middle_reps;
        std::vector<MorphismRep> maps;
        std::vector<int> middle_indices;
        for (int aid : mesh_arrows) {
            middle_indices.push_back(ar.arrows_[aid].target);
            middle_reps.push_back(ar.indecs_[ar.arrows_[aid].target].rep);
            maps.push_back(ar.arrows_[aid].map);
        }
        if (middle_reps.empty())
            throw std::logic_error("non-injective module with no irreducible maps out of it");
        const DirectSumRep middle = direct_sum(middle_reps);
        const MorphismRep theta = into_sum(middle, maps);
        if (!is_mono(theta)) throw std::logic_error("mesh source map is not a monomorphism");
        const QuotRep coker = cokernel(theta);
        if (is_zero_rep(coker.rep)) throw std::logic_error("mesh cokernel is zero");

        const int fresh = add_indec(coker.rep, -1);
        in_arrows.resize(ar.indecs_.size());
        out_arrows.resize(ar.indecs_.size());
        for (std::size_t i = 0; i < middle_indices.size(); ++i)
            add_arrow(middle_indices[i], fresh, compose(coker.projection, middle.inclusions[i]));

        ar.tau_inverse_[next] = fresh;
        ar.tau_[fresh] = next;
        const int seq = static_cast<int>(ar.sequences_.size());
        ar.sequences_.push_back({next, middle_indices, fresh, {theta, coker.projection}});
        ar.sequence_of_start_[next] = seq;
        ar.sequence_of_end_[fresh] = seq;
    }

    for (int i = 0; i < static_cast<int>(ar.indecs_.size()); ++i)
        if (!ar.indecs_[i].is_injective && !ar.tau_inverse_[i])
            throw std::logic_error("knitting stalled before completing every mesh");
    if (ar.count() != positive_root_count(ar.type_label_))
        throw std::logic_error("indecomposable count does not match the positive-root count of " +
                               ar.type_label_);
    // The multiplicity formulas downstream assume End(M)/rad = Q for every
    // indecomposable; assert it here once and for all.
    for (const Indec& m : ar.indecs_)
        if (!is_indecomposable(m.rep))
            throw std::logic_error("knitted module " + m.id + " is not indecomposable");
    return ar;
}

int ARQuiver::index_of(const std::string& id) const {
    for (int i = 0; i < count(); ++i)
        if (indecs_[i].id == id) return i;
    throw std::invalid_argument("unknown module id: " + id);
}

std::optional<int> ARQuiver::find_by_dims(const std::vector<int>& dims) const {
    const auto it = index_by_dims_.find(dims);
    if (it == index_by_dims_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> ARQuiver::tau(int i) const { return tau_.at(i); }
std::optional<int> ARQuiver::tau_inverse(int i) const { return tau_inverse_.at(i); }

int ARQuiver::projective_at(int vertex) const { return projective_of_vertex_.at(vertex); }
int ARQuiver::injective_at(int vertex) const { return injective_of_vertex_.at(vertex); }

std::vector<int> ARQuiver::non_injectives() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (!indecs_[i].is_injective) out.push_back(i);
    return out;
}

std::optional<int> ARQuiver::sequence_starting_at(int i) const { return sequence_of_start_.at(i); }
std::optional<int> ARQuiver::sequence_ending_at(int i) const { return sequence_of_end_.at(i); }

const std::vector<MorphismRep>& ARQuiver::hom(int i, int j) const {
    std::lock_guard<std::mutex> lock(*hom_cache_mutex_);
    const auto key = std::make_pair(i, j);
    auto it = hom_cache_.find(key);
    if (it == hom_cache_.end())
        it = hom_cache_.emplace(key, hom_basis(indecs_.at(i).rep, indecs_.at(j).rep)).first;
    return it->second;
}

int ARQuiver::hom_dim(int i, int j) const { return static_cast<int>(hom(i, j).size()); }

std::pair<int, MorphismRep> ARQuiver::classify(const Rep& m) const {
    if (!(m.quiver == quiver_)) throw std::invalid_argument("classify: module over a different quiver");
    if (!is_indecomposable(m)) throw std::invalid_argument("classify: module is decomposable");
    const auto idx = find_by_dims(m.dims);
    if (!idx) throw std::logic_error("classify: indecomposable with a non-root dim vector");
    // A basis of Hom between isomorphic indecomposables cannot consist of
    // radical elements only, so some basis element is an isomorphism.
    for (const MorphismRep& f : hom_basis(m, indecs_.at(*idx).rep))
        if (is_iso(f)) return {*idx, f};
    throw std::logic_error("classify: no isomorphism found at a matching dim vector");
}

std::vector<std::pair<int, int>> ARQuiver::decompose(const Rep& m) const {
    if (!(m.quiver == quiver_)) throw std::invalid_argument("decompose: module over a different quiver");
    std::vector<Rep> candidates;
    for (const Indec& ind : indecs_) candidates.push_back(ind.rep);
    const std::vector<int> mult = decompose_against(m, candidates);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < count(); ++i)
        if (mult[i] > 0) out.push_back({i, mult[i]});
    return out;
}

MorphismRep ARQuiver::left_almost_split_map(int i) const {
    const Indec& m = indec(i);
    if (m.is_injective) return quotient_rep(m.rep, socle_subspaces(m.rep)).projection;
    return sequences_.at(*sequence_of_start_.at(i)).conflation.inflation;
}

}  // namespace exactlab
