/**
 * Persistence pairing by boundary-matrix reduction over Z/2.
 *
 * The default path computes dimension-0 pairs with a union-find sweep (the
 * standard equivalent of reducing the edge columns) and higher dimensions
 * by sparse column reduction, processing the top dimension first so that
 * pivot columns of the lower dimension are cleared. The plain path reduces
 * the full matrix in global filtration order and serves as the oracle.
 */

#include "btda/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace btda {

namespace {

constexpr std::uint32_t none32 = 0xffffffffu;

// lex-sorted lookup from vertex tuple to position in filtration order
template <int NV, typename Packed>
class face_lookup {
public:
    explicit face_lookup(const std::vector<Packed>& simplices) {
        entries_.resize(simplices.size());
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            std::copy(simplices[i].v, simplices[i].v + NV, entries_[i].v);
            entries_[i].idx = static_cast<std::uint32_t>(i);
            entries_[i].value = simplices[i].value;
        }
        std::sort(entries_.begin(), entries_.end(),
                  [](const entry& a, const entry& b) {
                      for (int k = 0; k < NV; ++k)
                          if (a.v[k] != b.v[k]) return a.v[k] < b.v[k];
                      return false;
                  });
    }

    // filtration index of the face; throws if missing or filtered later
    std::uint32_t find(const vertex_id (&vs)[NV], float coface_value) const {
        entry key{};
        std::copy(vs, vs + NV, key.v);
        const auto it = std::lower_bound(
            entries_.begin(), entries_.end(), key,
            [](const entry& a, const entry& b) {
                for (int k = 0; k < NV; ++k)
                    if (a.v[k] != b.v[k]) return a.v[k] < b.v[k];
                return false;
            });
        if (it == entries_.end() || !std::equal(it->v, it->v + NV, key.v))
            throw filtration_inconsistency_error(
                "compute_persistence: missing face of a simplex");
        if (it->value > coface_value)
            throw filtration_inconsistency_error(
                "compute_persistence: face filtered after its coface");
        return it->idx;
    }

private:
    struct entry {
        vertex_id v[NV];
        std::uint32_t idx;
        float value;
    };
    std::vector<entry> entries_;
};

// union-find with birth tracking; the younger component dies on merge
class birth_union_find {
public:
    explicit birth_union_find(std::size_t n) : parent_(n), birth_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    void set_birth(std::uint32_t i, float value) { birth_[i] = value; }
    float birth(std::uint32_t root) const { return birth_[root]; }

    std::uint32_t find(std::uint32_t i) {
        std::uint32_t root = i;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[i] != root) {
            const std::uint32_t next = parent_[i];
            parent_[i] = root;
            i = next;
        }
        return root;
    }

    // merges the components of a and b; returns the birth value of the
    // component that dies, or nullopt if already connected
    std::optional<float> merge(std::uint32_t a, std::uint32_t b) {
        std::uint32_t ra = find(a), rb = find(b);
        if (ra == rb) return std::nullopt;
        // the component with the later (larger) birth dies
        if (birth_[ra] > birth_[rb]) std::swap(ra, rb);
        const float dying = birth_[rb];
        parent_[rb] = ra;
        return dying;
    }

    std::vector<std::uint32_t> roots() {
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) out.push_back(i);
        return out;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<float> birth_;
};

// z2 symmetric difference of sorted index vectors: a ^= b
void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              std::vector<std::uint32_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(scratch));
    a.swap(scratch);
}

struct reduction_result {
    std::vector<bar> pairs;                ///< finite intervals found
    std::vector<std::uint8_t> column_zero; ///< per column: reduced to zero
    std::vector<std::uint8_t> row_killed;  ///< per row: became a pivot
};

// reduces the dim-d boundary columns (rows = (d-1)-simplices, in filtration
// order); columns listed in `skip` are known positive and are not processed
template <typename BoundaryFn>
reduction_result reduce_columns(std::size_t n_cols, std::size_t n_rows,
                                int row_dim, const filtration& f,
                                BoundaryFn&& boundary,
                                const std::vector<std::uint8_t>* skip) {
    reduction_result res;
    res.column_zero.assign(n_cols, 0);
    res.row_killed.assign(n_rows, 0);
    std::vector<std::uint32_t> pivot_owner(n_rows, none32);
    std::vector<std::vector<std::uint32_t>> stored;
    std::vector<std::uint32_t> col, scratch;

    for (std::size_t j = 0; j < n_cols; ++j) {
        if (skip && (*skip)[j]) {
            res.column_zero[j] = 1;  // cleared: known to reduce to zero
            continue;
        }
        boundary(j, col);
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            const std::uint32_t piv = col.back();
            const std::uint32_t owner = pivot_owner[piv];
            if (owner == none32) {
                pivot_owner[piv] = static_cast<std::uint32_t>(stored.size());
                stored.push_back(col);
                res.row_killed[piv] = 1;
                res.pairs.push_back(bar{row_dim, f.value(row_dim, piv),
                                        f.value(row_dim + 1, j)});
                break;
            }
            xor_into(col, stored[owner], scratch);
        }
        if (col.empty()) res.column_zero[j] = 1;
    }
    return res;
}

void sort_barcode(barcode& b) {
    std::sort(b.intervals.begin(), b.intervals.end(),
              [](const bar& x, const bar& y) {
                  if (x.dim != y.dim) return x.dim < y.dim;
                  if (x.birth != y.birth) return x.birth < y.birth;
                  return x.death < y.death;
              });
}

} // namespace

barcode compute_persistence(const filtration& f) {
    if (!f.finalized())
        throw std::logic_error("compute_persistence: filtration not finalized");
    barcode result;
    const int top = f.top_dim();
    if (top < 0) return result;
    const int emit_max = std::max(0, top - 1);

    const std::size_t n_vertices = f.d0.size();
    // vertex ids must be the dim-0 simplices
    face_lookup<1, filtration::packed0> vertex_lookup(f.d0);

    // dimension 0: union-find over edges in filtration order
    birth_union_find uf(n_vertices);
    std::vector<std::uint8_t> edge_cycle(f.d1.size(), 0);
    {
        for (std::size_t i = 0; i < n_vertices; ++i)
            uf.set_birth(static_cast<std::uint32_t>(i), f.d0[i].value);
        // union-find indices are positions in the sorted d0 array; edge
        // endpoints map to positions through the lex lookup
        for (std::size_t e = 0; e < f.d1.size(); ++e) {
            const auto& edge = f.d1[e];
            const std::uint32_t a =
                vertex_lookup.find({edge.v[0]}, edge.value);
            const std::uint32_t b =
                vertex_lookup.find({edge.v[1]}, edge.value);
            const auto died = uf.merge(a, b);
            if (died)
                result.intervals.push_back(bar{0, *died, edge.value});
            else
                edge_cycle[e] = 1;
        }
        for (const std::uint32_t root : uf.roots())
            result.intervals.push_back(bar{0, uf.birth(root), infinite_death});
    }

    // dimension 2 deaths (tetrahedra) first, clearing triangle columns
    std::vector<std::uint8_t> triangle_cleared;
    std::vector<std::uint8_t> triangle_killed(f.d2.size(), 0);
    if (top >= 3) {
        face_lookup<3, filtration::packed2> tri_lookup(f.d2);
        auto boundary3 = [&](std::size_t j, std::vector<std::uint32_t>& col) {
            col.clear();
            const auto& t = f.d3[j];
            const vertex_id faces[4][3] = {
                {t.v[1], t.v[2], t.v[3]},
                {t.v[0], t.v[2], t.v[3]},
                {t.v[0], t.v[1], t.v[3]},
                {t.v[0], t.v[1], t.v[2]},
            };
            for (const auto& fc : faces) col.push_back(tri_lookup.find(fc, t.value));
        };
        auto res = reduce_columns(f.d3.size(), f.d2.size(), 2, f, boundary3, nullptr);
        triangle_cleared = res.row_killed;
        triangle_killed = res.row_killed;
        if (emit_max >= 2)
            for (const auto& p : res.pairs) result.intervals.push_back(p);
    }

    // dimension 1 deaths (triangles)
    std::vector<std::uint8_t> edge_killed(f.d1.size(), 0);
    std::vector<std::uint8_t> triangle_zero(f.d2.size(), 0);
    if (top >= 2) {
        face_lookup<2, filtration::packed1> edge_lookup(f.d1);
        auto boundary2 = [&](std::size_t j, std::vector<std::uint32_t>& col) {
            col.clear();
            const auto& t = f.d2[j];
            const vertex_id faces[3][2] = {
                {t.v[1], t.v[2]},
                {t.v[0], t.v[2]},
                {t.v[0], t.v[1]},
            };
            for (const auto& fc : faces) col.push_back(edge_lookup.find(fc, t.value));
        };
        auto res = reduce_columns(f.d2.size(), f.d1.size(), 1, f, boundary2,
                                  top >= 3 ? &triangle_cleared : nullptr);
        edge_killed = res.row_killed;
        triangle_zero = res.column_zero;
        for (const auto& p : res.pairs) result.intervals.push_back(p);
    }

    // essential classes
    if (emit_max >= 1)
        for (std::size_t e = 0; e < f.d1.size(); ++e)
            if (edge_cycle[e] && !edge_killed[e])
                result.intervals.push_back(bar{1, f.d1[e].value, infinite_death});
    if (emit_max >= 2)
        for (std::size_t t = 0; t < f.d2.size(); ++t)
            if (triangle_zero[t] && !triangle_killed[t])
                result.intervals.push_back(bar{2, f.d2[t].value, infinite_death});

    sort_barcode(result);
    return result;
}

barcode compute_persistence_plain(const filtration& f) {
    if (!f.finalized())
        throw std::logic_error("compute_persistence: filtration not finalized");
    barcode result;
    const int top = f.top_dim();
    if (top < 0) return result;
    const int emit_max = std::max(0, top - 1);

    // global order: (value, dim, lex); build the interleaved index
    struct ref {
        float value;
        int dim;
        std::uint32_t idx;  // index within its dimension's sorted array
    };
    std::vector<ref> order;
    order.reserve(f.size());
    for (int d = 0; d <= top; ++d)
        for (std::size_t i = 0; i < f.count(d); ++i)
            order.push_back(ref{static_cast<float>(f.value(d, i)), d,
                                static_cast<std::uint32_t>(i)});
    std::sort(order.begin(), order.end(), [&](const ref& a, const ref& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.dim != b.dim) return a.dim < b.dim;
        vertex_id va[4], vb[4];
        f.vertices(a.dim, a.idx, va);
        f.vertices(b.dim, b.idx, vb);
        return std::lexicographical_compare(va, va + a.dim + 1, vb, vb + b.dim + 1);
    });
    // position of each simplex in the global order
    std::vector<std::vector<std::uint32_t>> global_pos(top + 1);
    for (int d = 0; d <= top; ++d) global_pos[d].resize(f.count(d));
    for (std::size_t g = 0; g < order.size(); ++g)
        global_pos[order[g].dim][order[g].idx] = static_cast<std::uint32_t>(g);

    face_lookup<1, filtration::packed0> l0(f.d0);
    face_lookup<2, filtration::packed1> l1(f.d1);
    face_lookup<3, filtration::packed2> l2(f.d2);

    auto boundary = [&](const ref& r, std::vector<std::uint32_t>& col) {
        col.clear();
        vertex_id v[4];
        f.vertices(r.dim, r.idx, v);
        for (int drop = 0; drop <= r.dim; ++drop) {
            vertex_id face[4];
            int m = 0;
            for (int i = 0; i <= r.dim; ++i)
                if (i != drop) face[m++] = v[i];
            switch (r.dim) {
                case 1: col.push_back(global_pos[0][l0.find({face[0]}, r.value)]); break;
                case 2: col.push_back(global_pos[1][l1.find({face[0], face[1]}, r.value)]); break;
                case 3: col.push_back(global_pos[2][l2.find({face[0], face[1], face[2]}, r.value)]); break;
                default: break;
            }
        }
        std::sort(col.begin(), col.end());
    };

    const std::size_t total = order.size();
    std::vector<std::uint32_t> pivot_owner(total, none32);
    std::vector<std::vector<std::uint32_t>> stored(total);
    std::vector<std::uint8_t> is_zero(total, 0), killed(total, 0);
    std::vector<std::uint32_t> col, scratch;
    for (std::size_t g = 0; g < total; ++g) {
        const ref& r = order[g];
        if (r.dim == 0) {
            is_zero[g] = 1;
            continue;
        }
        boundary(r, col);
        while (!col.empty()) {
            const std::uint32_t piv = col.back();
            if (pivot_owner[piv] == none32) {
                pivot_owner[piv] = static_cast<std::uint32_t>(g);
                stored[g] = col;
                killed[piv] = 1;
                const ref& row = order[piv];
                result.intervals.push_back(
                    bar{row.dim, f.value(row.dim, row.idx), f.value(r.dim, r.idx)});
                break;
            }
            xor_into(col, stored[pivot_owner[piv]], scratch);
        }
        if (col.empty()) is_zero[g] = 1;
    }
    for (std::size_t g = 0; g < total; ++g)
        if (is_zero[g] && !killed[g] && order[g].dim <= emit_max)
            result.intervals.push_back(bar{order[g].dim,
                                           f.value(order[g].dim, order[g].idx),
                                           infinite_death});
    // drop intervals of unreported dimensions
    std::erase_if(result.intervals,
                  [&](const bar& b) { return b.dim > emit_max; });

    sort_barcode(result);
    return result;
}

int betti_at(const barcode& b, double r, int dim) {
    int count = 0;
    for (const auto& iv : b.intervals)
        if (iv.dim == dim && iv.birth <= r && r < iv.death) ++count;
    return count;
}

std::vector<bar> top_k_intervals(const barcode& b, int dim, std::size_t k,
                                 double clamp) {
    std::vector<bar> candidates;
    for (const auto& iv : b.intervals) {
        if (iv.dim != dim) continue;
        bar c = iv;
        if (std::isinf(c.death)) {
            if (std::isinf(clamp)) continue;  // only finite intervals by default
            if (clamp <= c.birth) continue;
            c.death = clamp;
        }
        if (c.length() > 0.0) candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end(), [](const bar& x, const bar& y) {
        const double lx = x.length(), ly = y.length();
        if (lx != ly) return lx > ly;
        if (x.birth != y.birth) return x.birth < y.birth;
        return x.death < y.death;
    });
    if (candidates.size() > k) candidates.resize(k);
    return candidates;
}

std::size_t dominance_count(std::span<const bar> bars, double factor) {
    for (std::size_t m = 1; m <= bars.size(); ++m) {
        const double len_m = bars[m - 1].length();
        const double len_next = m < bars.size() ? bars[m].length() : 0.0;
        if (len_m >= factor * len_next) return m;
    }
    return 0;
}

} // namespace btda
