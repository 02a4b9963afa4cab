/**
 * Filtration storage and Vietoris-Rips construction.
 */

#include "btda/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace btda {

namespace {

template <typename S>
bool lex_value_less(const S& a, const S& b, int nv) {
    if (a.value != b.value) return a.value < b.value;
    for (int i = 0; i < nv; ++i)
        if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
    return false;
}

} // namespace

void filtration::add(std::span<const vertex_id> vs, double value) {
    if (vs.empty() || vs.size() > 4)
        throw std::invalid_argument("filtration::add: dimension must be 0..3");
    std::array<vertex_id, 4> s{};
    std::copy(vs.begin(), vs.end(), s.begin());
    std::sort(s.begin(), s.begin() + vs.size());
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (s[i] == s[i - 1])
            throw std::invalid_argument("filtration::add: repeated vertex");
    const float fv = static_cast<float>(value);
    switch (vs.size()) {
        case 1: d0.push_back({{s[0]}, fv}); break;
        case 2: d1.push_back({{s[0], s[1]}, fv}); break;
        case 3: d2.push_back({{s[0], s[1], s[2]}, fv}); break;
        case 4: d3.push_back({{s[0], s[1], s[2], s[3]}, fv}); break;
    }
    finalized_ = false;
}

void filtration::add(std::initializer_list<vertex_id> vs, double value) {
    add(std::span<const vertex_id>(vs.begin(), vs.size()), value);
}

void filtration::finalize() {
    std::sort(d0.begin(), d0.end(),
              [](const packed0& a, const packed0& b) { return lex_value_less(a, b, 1); });
    std::sort(d1.begin(), d1.end(),
              [](const packed1& a, const packed1& b) { return lex_value_less(a, b, 2); });
    std::sort(d2.begin(), d2.end(),
              [](const packed2& a, const packed2& b) { return lex_value_less(a, b, 3); });
    std::sort(d3.begin(), d3.end(),
              [](const packed3& a, const packed3& b) { return lex_value_less(a, b, 4); });
    finalized_ = true;
}

std::size_t filtration::size() const {
    return d0.size() + d1.size() + d2.size() + d3.size();
}

std::size_t filtration::count(int dim) const {
    switch (dim) {
        case 0: return d0.size();
        case 1: return d1.size();
        case 2: return d2.size();
        case 3: return d3.size();
        default: return 0;
    }
}

int filtration::top_dim() const {
    for (int d = 3; d >= 0; --d)
        if (count(d)) return d;
    return -1;
}

double filtration::value(int dim, std::size_t i) const {
    switch (dim) {
        case 0: return d0[i].value;
        case 1: return d1[i].value;
        case 2: return d2[i].value;
        case 3: return d3[i].value;
        default: throw std::out_of_range("filtration::value: bad dimension");
    }
}

void filtration::vertices(int dim, std::size_t i, vertex_id out[4]) const {
    switch (dim) {
        case 0: out[0] = d0[i].v[0]; break;
        case 1: std::copy(d1[i].v, d1[i].v + 2, out); break;
        case 2: std::copy(d2[i].v, d2[i].v + 3, out); break;
        case 3: std::copy(d3[i].v, d3[i].v + 4, out); break;
        default: throw std::out_of_range("filtration::vertices: bad dimension");
    }
}

filtration build_rips(const point_cloud& cloud, double r_max, int max_dim,
                      const rips_limits& limits) {
    if (cloud.empty()) throw std::invalid_argument("build_rips: empty cloud");
    if (!(r_max > 0.0)) throw std::invalid_argument("build_rips: requires r_max > 0");
    if (max_dim < 0 || max_dim > filtration::max_supported_dim)
        throw std::invalid_argument("build_rips: max_dim must be 0..3");
    const std::size_t n = cloud.size();
    if (n > limits.max_points)
        throw rips_cap_error("build_rips: " + std::to_string(n) +
                             " points exceed the cap of " +
                             std::to_string(limits.max_points));

    filtration f;
    f.d0.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        f.d0.push_back({{static_cast<vertex_id>(i)}, 0.0f});

    std::size_t budget = limits.max_simplices;
    auto spend = [&](std::size_t amount, const char* what) {
        if (amount > budget)
            throw rips_cap_error(std::string("build_rips: simplex cap of ") +
                                 std::to_string(limits.max_simplices) +
                                 " exceeded while adding " + what);
        budget -= amount;
    };
    spend(n, "vertices");

    if (max_dim < 1) {
        f.finalize();
        return f;
    }

    // edges: all pairs at distance <= r_max, plus the neighbor table used
    // for clique enumeration
    const double r2 = r_max * r_max;
    std::vector<std::uint32_t> nbr_start(n + 1, 0);
    std::vector<vertex_id> nbr;
    for (std::size_t i = 0; i < n; ++i) {
        const auto pi = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (squared_distance(pi, cloud.point(j)) <= r2) {
                ++nbr_start[i + 1];
                ++nbr_start[j + 1];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) nbr_start[i + 1] += nbr_start[i];
    nbr.resize(nbr_start[n]);
    {
        std::vector<std::uint32_t> cursor(nbr_start.begin(), nbr_start.end() - 1);
        std::size_t edge_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto pi = cloud.point(i);
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d2 = squared_distance(pi, cloud.point(j));
                if (d2 > r2) continue;
                nbr[cursor[i]++] = static_cast<vertex_id>(j);
                nbr[cursor[j]++] = static_cast<vertex_id>(i);
                ++edge_count;
            }
        }
        spend(edge_count, "edges");
        f.d1.reserve(edge_count);
        for (std::size_t i = 0; i < n; ++i) {
            const auto pi = cloud.point(i);
            for (std::uint32_t k = nbr_start[i]; k < nbr_start[i + 1]; ++k) {
                const vertex_id j = nbr[k];
                if (j <= i) continue;
                const float d = static_cast<float>(
                    std::sqrt(squared_distance(pi, cloud.point(j))));
                f.d1.push_back({{static_cast<vertex_id>(i), j}, d});
            }
        }
    }
    // neighbor lists are sorted by construction (j enumerated ascending)

    if (max_dim >= 2) {
        // two passes over the edge list: count triangles, then fill
        auto for_each_common = [&](vertex_id a, vertex_id b, auto&& fn) {
            // common neighbors of a and b strictly above b
            std::uint32_t ia = nbr_start[a], ib = nbr_start[b];
            const std::uint32_t ea = nbr_start[a + 1], eb = nbr_start[b + 1];
            while (ia < ea && nbr[ia] <= b) ++ia;
            while (ib < eb && nbr[ib] <= b) ++ib;
            while (ia < ea && ib < eb) {
                if (nbr[ia] < nbr[ib])
                    ++ia;
                else if (nbr[ia] > nbr[ib])
                    ++ib;
                else {
                    fn(nbr[ia]);
                    ++ia;
                    ++ib;
                }
            }
        };
        std::size_t tri_count = 0;
        for (const auto& e : f.d1) {
            for_each_common(e.v[0], e.v[1], [&](vertex_id) { ++tri_count; });
            if (tri_count > budget)
                throw rips_cap_error("build_rips: simplex cap of " +
                                     std::to_string(limits.max_simplices) +
                                     " exceeded while counting triangles");
        }
        spend(tri_count, "triangles");
        f.d2.reserve(tri_count);
        for (const auto& e : f.d1) {
            const auto pa = cloud.point(e.v[0]);
            const auto pb = cloud.point(e.v[1]);
            for_each_common(e.v[0], e.v[1], [&](vertex_id c) {
                const auto pc = cloud.point(c);
                const double dac = squared_distance(pa, pc);
                const double dbc = squared_distance(pb, pc);
                const double diam =
                    std::max(static_cast<double>(e.value) * e.value,
                             std::max(dac, dbc));
                f.d2.push_back({{e.v[0], e.v[1], c},
                                static_cast<float>(std::sqrt(diam))});
            });
        }
    }

    if (max_dim >= 3) {
        auto for_each_common3 = [&](const filtration::packed2& t, auto&& fn) {
            // neighbors of all three vertices strictly above the largest
            std::uint32_t ia = nbr_start[t.v[0]], ib = nbr_start[t.v[1]],
                          ic = nbr_start[t.v[2]];
            const std::uint32_t ea = nbr_start[t.v[0] + 1],
                                eb = nbr_start[t.v[1] + 1],
                                ec = nbr_start[t.v[2] + 1];
            const vertex_id top = t.v[2];
            while (ia < ea && nbr[ia] <= top) ++ia;
            while (ib < eb && nbr[ib] <= top) ++ib;
            while (ic < ec && nbr[ic] <= top) ++ic;
            while (ia < ea && ib < eb && ic < ec) {
                const vertex_id m =
                    std::max({nbr[ia], nbr[ib], nbr[ic]});
                if (nbr[ia] == m && nbr[ib] == m && nbr[ic] == m) {
                    fn(m);
                    ++ia;
                    ++ib;
                    ++ic;
                } else {
                    if (nbr[ia] < m) ++ia;
                    if (nbr[ib] < m) ++ib;
                    if (nbr[ic] < m) ++ic;
                }
            }
        };
        std::size_t tet_count = 0;
        for (const auto& t : f.d2) {
            for_each_common3(t, [&](vertex_id) { ++tet_count; });
            if (tet_count > budget)
                throw rips_cap_error("build_rips: simplex cap of " +
                                     std::to_string(limits.max_simplices) +
                                     " exceeded while counting tetrahedra");
        }
        spend(tet_count, "tetrahedra");
        f.d3.reserve(tet_count);
        for (const auto& t : f.d2) {
            const auto pa = cloud.point(t.v[0]);
            const auto pb = cloud.point(t.v[1]);
            const auto pc = cloud.point(t.v[2]);
            for_each_common3(t, [&](vertex_id d) {
                const auto pd = cloud.point(d);
                double diam2 = static_cast<double>(t.value) * t.value;
                diam2 = std::max(diam2, squared_distance(pa, pd));
                diam2 = std::max(diam2, squared_distance(pb, pd));
                diam2 = std::max(diam2, squared_distance(pc, pd));
                f.d3.push_back({{t.v[0], t.v[1], t.v[2], d},
                                static_cast<float>(std::sqrt(diam2))});
            });
        }
    }

    f.finalize();
    return f;
}

} // namespace btda
