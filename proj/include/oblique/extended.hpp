#pragma once

// The extended matching model: the column graph of a diamond word, its
// zero-ordinate function Y, admissible matchings, the bijection with
// sequences of interlaced partitions, flips with abscissas, the
// contraction to steep tilings and the plane-partition specialization.
//
// Coordinates are doubled throughout (columns sit at abscissas 3j/2,
// 3j/2-1 or 3j/2-1/2, ordinates on half-integer lattices), so every
// stored coordinate is an integer.

#include "partition.hpp"
#include "steep.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblique {

/// Diamond word: a sequence over the four interlacing relations.  On the
/// wire the tokens are h+ (horizontal grow), h- (horizontal shrink),
/// v+ (vertical grow), v- (vertical shrink).
using DiamondWord = std::vector<StripRelation>;

inline DiamondWord parse_diamond(const std::string& text) {
    DiamondWord d;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok == "h+") d.push_back(StripRelation::HPlus);
        else if (tok == "h-") d.push_back(StripRelation::HMinus);
        else if (tok == "v+") d.push_back(StripRelation::VPlus);
        else if (tok == "v-") d.push_back(StripRelation::VMinus);
        else throw std::invalid_argument("parse_diamond: unknown token '" + tok + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (d.empty()) throw std::invalid_argument("parse_diamond: empty word");
    return d;
}

inline std::string diamond_to_string(const DiamondWord& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += relation_name(d[i]);
    }
    return s;
}

/// Column abscissas and the local zero ordinate Y, both doubled.  The
/// x-index runs over V_0, W_1, V_1, ..., W_k, V_k (2k+1 columns).
struct ColumnGeometry {
    DiamondWord diamond;
    std::vector<int> x2;  // doubled abscissas, strictly increasing
    std::vector<int> y2;  // doubled Y at each column

    bool operator==(const ColumnGeometry&) const = default;

    int k() const { return static_cast<int>(diamond.size()); }

    /// Doubled ordinate lattice offset of column c: vertices sit at
    /// ordinates y2 with y2 = offset (mod 2).
    int lattice_parity(int c) const {
        if (c % 2 == 0) return (c / 2 + 1) % 2;  // V_j: Z + (j+1)/2
        int j = (c + 1) / 2;
        bool primed = !is_horizontal(diamond[static_cast<std::size_t>(j - 1)]);
        return primed ? j % 2 : (j + 1) % 2;  // W_j
    }
};

inline ColumnGeometry build_geometry(const DiamondWord& d) {
    ColumnGeometry g;
    g.diamond = d;
    int k = static_cast<int>(d.size());
    g.x2.assign(static_cast<std::size_t>(2 * k) + 1, 0);
    g.y2.assign(static_cast<std::size_t>(2 * k) + 1, 0);
    for (int j = 1; j <= k; ++j) {
        bool primed = !is_horizontal(d[static_cast<std::size_t>(j - 1)]);
        g.x2[static_cast<std::size_t>(2 * j - 1)] = primed ? 3 * j - 1 : 3 * j - 2;
        g.x2[static_cast<std::size_t>(2 * j)] = 3 * j;
    }
    for (int i = 1; i <= k; ++i) {
        StripRelation r = d[static_cast<std::size_t>(i - 1)];
        int step = (r == StripRelation::HPlus || r == StripRelation::VMinus) ? 1 : -1;
        g.y2[static_cast<std::size_t>(2 * i)] = g.y2[static_cast<std::size_t>(2 * i - 2)] + step;
        bool primed = !is_horizontal(r);
        g.y2[static_cast<std::size_t>(2 * i - 1)] =
            primed ? g.y2[static_cast<std::size_t>(2 * i - 2)] : g.y2[static_cast<std::size_t>(2 * i)];
    }
    return g;
}

/// Sequence of partitions interlaced according to the diamond word.
struct ExtendedSeq {
    DiamondWord diamond;
    std::vector<Partition> lambdas;

    ExtendedSeq() = default;
    ExtendedSeq(DiamondWord d, std::vector<Partition> ls)
        : diamond(std::move(d)), lambdas(std::move(ls)) {}

    static ExtendedSeq all_empty(const DiamondWord& d) {
        return ExtendedSeq(d, std::vector<Partition>(d.size() + 1));
    }

    const Partition& lambda(int j) const { return lambdas.at(static_cast<std::size_t>(j)); }
    bool is_pure() const { return lambdas.front().empty() && lambdas.back().empty(); }

    long long total_size() const {
        long long s = 0;
        for (const auto& l : lambdas) s += l.size();
        return s;
    }

    std::optional<std::string> violation() const {
        if (lambdas.size() != diamond.size() + 1)
            return "sequence must hold exactly k+1 partitions";
        for (const auto& l : lambdas)
            if (!l.valid()) return "entry " + l.to_string() + " is not a partition";
        for (std::size_t i = 1; i <= diamond.size(); ++i) {
            StripRelation r = diamond[i - 1];
            if (!interlaced(lambdas[i - 1], lambdas[i], r))
                return "relation " + std::string(relation_name(r)) + " violated between lambda(" +
                       std::to_string(i - 1) + ") and lambda(" + std::to_string(i) + ")";
        }
        return std::nullopt;
    }

    void validate() const {
        if (auto v = violation()) throw std::invalid_argument("ExtendedSeq: " + *v);
    }

    bool operator==(const ExtendedSeq&) const = default;
};

/// Vertex key: (column index 0..2k, doubled ordinate).
using VertexKey = std::pair<int, int>;
using MatchEdge = std::pair<VertexKey, VertexKey>;

inline MatchEdge make_edge(VertexKey a, VertexKey b) {
    return a < b ? MatchEdge{a, b} : MatchEdge{b, a};
}

/// Finite window of an admissible matching: matched edges whose endpoints
/// lie in the doubled ordinate range [lo2, hi2]; outside the window each
/// column continues with its asymptotic pattern.
struct MatchingWindow {
    ColumnGeometry geo;
    int lo2 = 0;
    int hi2 = 0;
    std::set<MatchEdge> edges;

    bool operator==(const MatchingWindow&) const = default;

    bool matched(const MatchEdge& e) const { return edges.count(e) > 0; }
};

namespace detail {

/// Occupied (left-matched) doubled ordinates of the column coding lam
/// around zero level y0_2, the n-th from the top being
/// y0_2 + 2 lam_n - 2n + 1.
inline long long occupied_ord2(int y0_2, const Partition& lam, int n) {
    return y0_2 + 2LL * lam.part(n) - 2 * n + 1;
}

/// Empty (right-matched) doubled ordinates, ascending.
inline long long empty_ord2(int y0_2, const Partition& conj_lam, int n) {
    return y0_2 - 2LL * conj_lam.part(n) + 2 * n - 1;
}

}  // namespace detail

/// Window bounds containing all displaced particles of the sequence plus
/// a safety margin.
inline std::pair<int, int> sufficient_bounds(const ExtendedSeq& s, int margin = 6) {
    ColumnGeometry g = build_geometry(s.diamond);
    int lo = 0, hi = 0;
    for (int j = 0; j <= g.k(); ++j) {
        int y0 = g.y2[static_cast<std::size_t>(2 * j)];
        hi = std::max(hi, y0 + 2 * s.lambda(j).cols() + 1);
        lo = std::min(lo, y0 - 2 * s.lambda(j).rows() - 1);
    }
    return {lo - margin, hi + margin};
}

/// Inverse bijection: build the matching window of a valid sequence.
/// Horizontal edges are forced by the left-matched sets; diagonal edges
/// pair the two forced vertex lists slot by slot (from the bottom on
/// unprimed slots, from the top on primed ones).
inline MatchingWindow psi_inverse(const ExtendedSeq& s, int lo2, int hi2) {
    s.validate();
    auto [need_lo, need_hi] = sufficient_bounds(s, 4);
    if (lo2 > need_lo || hi2 < need_hi)
        throw std::invalid_argument("psi_inverse: window too small for the sequence");
    ColumnGeometry g = build_geometry(s.diamond);
    MatchingWindow m;
    m.geo = g;
    m.lo2 = lo2;
    m.hi2 = hi2;
    int k = g.k();
    auto add = [&](int ca, long long ya, int cb, long long yb) {
        if (ya < lo2 || ya > hi2 || yb < lo2 || yb > hi2) return;
        m.edges.insert(make_edge({ca, static_cast<int>(ya)}, {cb, static_cast<int>(yb)}));
    };
    for (int j = 1; j <= k; ++j) {
        bool primed = !is_horizontal(s.diamond[static_cast<std::size_t>(j - 1)]);
        int yW = g.y2[static_cast<std::size_t>(2 * j - 1)];
        int yL = g.y2[static_cast<std::size_t>(2 * j - 2)];
        int yR = g.y2[static_cast<std::size_t>(2 * j)];
        const Partition& left = s.lambda(j - 1);
        const Partition& right = s.lambda(j);
        Partition left_conj = conjugate(left);
        (void)yW;
        if (!primed) {
            // W_j shares the V_j lattice: horizontal edges W_j(y)-V_j(y) on
            // the occupied set of lambda^(j), diagonals pair the empty set
            // of lambda^(j-1) with the empty set of lambda^(j), bottom-up.
            for (int n = 1;; ++n) {
                long long y = detail::occupied_ord2(yR, right, n);
                if (y < lo2) break;
                add(2 * j - 1, y, 2 * j, y);
            }
            for (int n = 1;; ++n) {
                long long a = detail::empty_ord2(yL, left_conj, n);
                long long b = detail::empty_ord2(yR, conjugate(right), n);
                if (a > hi2 && b > hi2) break;
                if (a - b != 1 && b - a != 1)
                    throw std::logic_error("psi_inverse: diagonal pairing misaligned");
                add(2 * j - 2, a, 2 * j - 1, b);
            }
        } else {
            // W_j shares the V_{j-1} lattice: horizontal edges
            // V_{j-1}(y)-W_j(y) on the empty set of lambda^(j-1), diagonals
            // pair the occupied sets of lambda^(j-1) and lambda^(j), top-down.
            for (int n = 1;; ++n) {
                long long y = detail::empty_ord2(yL, left_conj, n);
                if (y > hi2) break;
                add(2 * j - 2, y, 2 * j - 1, y);
            }
            for (int n = 1;; ++n) {
                long long a = detail::occupied_ord2(yL, left, n);
                long long b = detail::occupied_ord2(yR, right, n);
                if (a < lo2 && b < lo2) break;
                if (a - b != 1 && b - a != 1)
                    throw std::logic_error("psi_inverse: diagonal pairing misaligned");
                add(2 * j - 1, a, 2 * j, b);
            }
        }
    }
    return m;
}

inline MatchingWindow psi_inverse(const ExtendedSeq& s) {
    auto [lo2, hi2] = sufficient_bounds(s);
    return psi_inverse(s, lo2, hi2);
}

/// Whether the window vertex (c, y2) is matched to the left: covered by a
/// stored edge towards a smaller column, or uncovered on column 0.
inline bool matched_left(const MatchingWindow& m, int c, int y2) {
    const ColumnGeometry& g = m.geo;
    int k = g.k();
    if (c % 2 != 0) throw std::invalid_argument("matched_left: V-columns only");
    int j = c / 2;
    if (j > 0) {
        bool primed = !is_horizontal(g.diamond[static_cast<std::size_t>(j - 1)]);
        if (!primed) {
            if (m.matched(make_edge({2 * j - 1, y2}, {c, y2}))) return true;
        } else {
            if (m.matched(make_edge({2 * j - 1, y2 - 1}, {c, y2}))) return true;
            if (m.matched(make_edge({2 * j - 1, y2 + 1}, {c, y2}))) return true;
        }
        return false;
    }
    // column V_0: left-matched means uncovered
    if (k >= 1) {
        bool primed1 = !is_horizontal(g.diamond[0]);
        if (!primed1) {
            if (m.matched(make_edge({0, y2}, {1, y2 - 1})) ||
                m.matched(make_edge({0, y2}, {1, y2 + 1})))
                return false;
        } else {
            if (m.matched(make_edge({0, y2}, {1, y2}))) return false;
        }
    }
    return true;
}

/// Structural check of a window: edges connect adjacent columns with the
/// legal offsets, no vertex is covered twice, and every interior vertex
/// off the two boundary columns is covered.
inline void validate_window(const MatchingWindow& m) {
    const ColumnGeometry& g = m.geo;
    int k = g.k();
    std::map<VertexKey, int> cover;
    for (const auto& e : m.edges) {
        auto [a, b] = e;
        if (a.first < 0 || b.first > 2 * k || b.first - a.first != 1)
            throw std::invalid_argument("non-admissible matching: edge between non-adjacent columns");
        int dx = g.x2[static_cast<std::size_t>(b.first)] - g.x2[static_cast<std::size_t>(a.first)];
        int dy = b.second - a.second;
        bool ok = (dx == 2 && dy == 0) || (dx == 1 && (dy == 1 || dy == -1));
        if (!ok) throw std::invalid_argument("non-admissible matching: edge with illegal offset");
        for (const VertexKey& v : {a, b}) {
            if (((v.second % 2) + 2) % 2 != g.lattice_parity(v.first))
                throw std::invalid_argument("non-admissible matching: vertex off its lattice");
            if (++cover[v] > 1)
                throw std::invalid_argument("non-admissible matching: vertex covered twice");
        }
    }
    for (int c = 1; c < 2 * k; ++c) {
        int parity = g.lattice_parity(c);
        for (int y2 = m.lo2 + 2; y2 <= m.hi2 - 2; ++y2) {
            if (((y2 % 2) + 2) % 2 != parity) continue;
            if (!cover.count({c, y2}))
                throw std::invalid_argument("non-admissible matching: uncovered interior vertex");
        }
    }
}

/// Forward bijection: read each V-column's left-matched set as the Maya
/// diagram of its partition.  Rejects malformed windows and matchings
/// whose columns are not balanced around Y (non-admissible matchings).
inline ExtendedSeq psi(const MatchingWindow& m) {
    const ColumnGeometry& g = m.geo;
    int k = g.k();
    validate_window(m);
    std::vector<Partition> lambdas;
    for (int j = 0; j <= k; ++j) {
        int c = 2 * j;
        int parity = g.lattice_parity(c);
        std::vector<long long> occ;
        for (int y2 = m.hi2 - 2; y2 >= m.lo2 + 2; --y2) {
            if (((y2 % 2) + 2) % 2 != parity) continue;
            if (matched_left(m, c, y2)) occ.push_back(y2 - g.y2[static_cast<std::size_t>(c)]);
        }
        if (occ.empty()) throw std::invalid_argument("psi: window too small");
        auto [lam, charge] = partition_from_occupied_positions(occ);
        if (charge != 0)
            throw std::invalid_argument(
                "psi: non-admissible matching (column " + std::to_string(j) +
                " unbalanced around its zero ordinate, offset " + std::to_string(charge) + ")");
        lambdas.push_back(lam);
    }
    ExtendedSeq s(g.diamond, std::move(lambdas));
    s.validate();
    return s;
}

/// Bounded face of the graph between the two V_j vertices at doubled
/// ordinates y2 and y2+2, for 1 <= j <= k-1.
struct Face {
    int j = 0;
    int y2 = 0;
};

/// Boundary edges of a face in cyclic order; degree 4, 6 or 8 depending
/// on whether the two adjacent slots are primed.
inline std::vector<MatchEdge> face_edges(const ColumnGeometry& g, const Face& f) {
    int j = f.j, y2 = f.y2;
    bool left_primed = !is_horizontal(g.diamond[static_cast<std::size_t>(j - 1)]);
    bool right_primed = !is_horizontal(g.diamond[static_cast<std::size_t>(j)]);
    std::vector<MatchEdge> out;
    VertexKey lo{2 * j, y2}, hiv{2 * j, y2 + 2};
    if (!left_primed) {
        out.push_back(make_edge(lo, {2 * j - 1, y2}));
        out.push_back(make_edge({2 * j - 1, y2}, {2 * j - 2, y2 + 1}));
        out.push_back(make_edge({2 * j - 2, y2 + 1}, {2 * j - 1, y2 + 2}));
        out.push_back(make_edge({2 * j - 1, y2 + 2}, hiv));
    } else {
        out.push_back(make_edge(lo, {2 * j - 1, y2 + 1}));
        out.push_back(make_edge({2 * j - 1, y2 + 1}, hiv));
    }
    if (!right_primed) {
        out.push_back(make_edge(hiv, {2 * j + 1, y2 + 1}));
        out.push_back(make_edge({2 * j + 1, y2 + 1}, lo));
    } else {
        out.push_back(make_edge(hiv, {2 * j + 1, y2 + 2}));
        out.push_back(make_edge({2 * j + 1, y2 + 2}, {2 * j + 2, y2 + 1}));
        out.push_back(make_edge({2 * j + 2, y2 + 1}, {2 * j + 1, y2}));
        out.push_back(make_edge({2 * j + 1, y2}, lo));
    }
    return out;
}

/// A face is flippable when its boundary edges alternate matched and
/// unmatched.
inline bool flippable(const MatchingWindow& m, const Face& f) {
    auto edges = face_edges(m.geo, f);
    bool first = m.matched(edges[0]);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (m.matched(edges[i]) != ((i % 2 == 0) ? first : !first)) return false;
    return true;
}

struct MatchingFlip {
    bool ok = false;
    MatchingWindow matching;
    int abscissa2 = 0;  // doubled abscissa 3j
    bool ascendent = false;
    std::string violation;
};

/// Exchange the matched and unmatched edges around a flippable face; the
/// particle at V_j jumps between y2 and y2+2.
inline MatchingFlip flip_matching(const MatchingWindow& m, const Face& f) {
    MatchingFlip out;
    if (f.j < 1 || f.j >= m.geo.k()) {
        out.violation = "face column out of range";
        return out;
    }
    if (f.y2 < m.lo2 + 2 || f.y2 + 2 > m.hi2 - 2) {
        out.violation = "face outside the window interior";
        return out;
    }
    if (((f.y2 % 2) + 2) % 2 != m.geo.lattice_parity(2 * f.j)) {
        out.violation = "face ordinate off the column lattice";
        return out;
    }
    if (!flippable(m, f)) {
        out.violation = "face edges do not alternate";
        return out;
    }
    bool was_low = matched_left(m, 2 * f.j, f.y2);
    MatchingWindow next = m;
    for (const auto& e : face_edges(m.geo, f)) {
        if (next.edges.count(e))
            next.edges.erase(e);
        else
            next.edges.insert(e);
    }
    out.ok = true;
    out.matching = std::move(next);
    out.abscissa2 = 3 * f.j;
    out.ascendent = was_low;  // the particle jumps from y2 up to y2+2
    return out;
}

/// All flippable faces in the window interior.
inline std::vector<Face> flippable_faces(const MatchingWindow& m) {
    std::vector<Face> out;
    for (int j = 1; j < m.geo.k(); ++j) {
        int parity = m.geo.lattice_parity(2 * j);
        for (int y2 = m.lo2 + 2; y2 + 2 <= m.hi2 - 2; ++y2) {
            if (((y2 % 2) + 2) % 2 != parity) continue;
            Face f{j, y2};
            if (flippable(m, f)) out.push_back(f);
        }
    }
    return out;
}

/// Steep reduction: an alternating diamond word (odd slots horizontal,
/// even slots vertical, even length) contracts to the sign word with
/// w_i = + iff the i-th relation grows.
inline SignWord contract_to_steep(const DiamondWord& d) {
    int k = static_cast<int>(d.size());
    if (k % 2 != 0)
        throw std::invalid_argument("contract_to_steep: diamond word length must be even");
    std::vector<Sign> signs;
    for (int i = 1; i <= k; ++i) {
        StripRelation r = d[static_cast<std::size_t>(i - 1)];
        if (is_horizontal(r) != (i % 2 == 1))
            throw std::invalid_argument(
                "contract_to_steep: word is not alternating (horizontal on odd slots, "
                "vertical on even slots)");
        signs.push_back(grows(r) ? Sign::plus : Sign::minus);
    }
    return SignWord(std::move(signs));
}

/// Diagonal-slice encoding of a plane partition of width 2l as a pure
/// sequence for the diamond word h+^l h-^l.
inline ExtendedSeq plane_partition_adapter(int ell, const std::vector<std::vector<int>>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1) throw std::invalid_argument("plane_partition_adapter: entries must be >= 1");
            if (c + 1 < rows[r].size() && rows[r][c + 1] > v)
                throw std::invalid_argument("plane_partition_adapter: rows must weakly decrease");
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] > v)
                throw std::invalid_argument("plane_partition_adapter: columns must weakly decrease");
        }
    DiamondWord d;
    for (int i = 0; i < ell; ++i) d.push_back(StripRelation::HPlus);
    for (int i = 0; i < ell; ++i) d.push_back(StripRelation::HMinus);
    std::vector<Partition> slices;
    for (int diag = -ell; diag <= ell; ++diag) {
        std::vector<int> parts;
        for (int r = 1;; ++r) {
            int c = r + diag;
            if (c < 1) continue;
            if (r > static_cast<int>(rows.size())) break;
            if (c > static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size())) break;
            parts.push_back(rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]);
        }
        slices.emplace_back(parts);
    }
    if (!slices.front().empty() || !slices.back().empty())
        throw std::invalid_argument("plane_partition_adapter: array wider than 2l");
    ExtendedSeq s(d, std::move(slices));
    s.validate();
    return s;
}

/// Inverse of the slice encoding.
inline std::vector<std::vector<int>> plane_partition_from_seq(const ExtendedSeq& s) {
    int k = static_cast<int>(s.diamond.size());
    if (k % 2 != 0) throw std::invalid_argument("plane_partition_from_seq: odd diamond length");
    int ell = k / 2;
    std::map<std::pair<int, int>, int> cells;
    int max_row = 0;
    for (int j = 0; j <= k; ++j) {
        int diag = j - ell;
        const Partition& lam = s.lambda(j);
        for (int n = 1; n <= lam.rows(); ++n) {
            int r = diag >= 0 ? n : n - diag;
            int c = r + diag;
            cells[{r, c}] = lam.part(n);
            max_row = std::max(max_row, r);
        }
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(max_row));
    for (const auto& [rc, v] : cells) {
        auto& row = rows[static_cast<std::size_t>(rc.first - 1)];
        if (static_cast<int>(row.size()) < rc.second) row.resize(static_cast<std::size_t>(rc.second), 0);
        row[static_cast<std::size_t>(rc.second - 1)] = v;
    }
    for (auto& row : rows)
        for (int v : row)
            if (v == 0) throw std::invalid_argument("plane_partition_from_seq: slices leave gaps");
    return rows;
}

}  // namespace oblique
