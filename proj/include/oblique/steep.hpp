#pragma once

// Steep tilings of the oblique strip 0 <= x-y <= 2l: sign words, charges,
// sequences of interlaced partitions, finite tiling windows, height
// functions, flips and flip distance, plus the Aztec-diamond and plane-
// overpartition adapters.
//
// A tiling is an infinite object; the canonical representation here is the
// interlaced sequence, and TilingWindow is a derived view on a window of
// half-width A around the origin.  Site abscissas are half-integers and are
// carried doubled (odd integers) so that everything stays integral.

#include "partition.hpp"

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblique {

enum class Sign : char { plus = '+', minus = '-' };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }

/// Asymptotic data of a steep tiling: a +- word of even length 2l >= 2.
struct SignWord {
    std::vector<Sign> signs;

    SignWord() = default;
    explicit SignWord(std::vector<Sign> s) : signs(std::move(s)) {}

    static SignWord parse(const std::string& text) {
        std::vector<Sign> s;
        for (char c : text) {
            if (c == '+') s.push_back(Sign::plus);
            else if (c == '-') s.push_back(Sign::minus);
            else throw std::invalid_argument("SignWord: bad character in word");
        }
        SignWord w(std::move(s));
        w.check();
        return w;
    }

    static SignWord repeat(const std::string& block, int times) {
        std::string t;
        for (int i = 0; i < times; ++i) t += block;
        return parse(t);
    }

    void check() const {
        if (signs.empty() || signs.size() % 2 != 0)
            throw std::invalid_argument("SignWord: length must be even and >= 2");
    }

    int length() const { return static_cast<int>(signs.size()); }
    int ell() const { return length() / 2; }

    /// 1-indexed letter.
    Sign at(int i) const { return signs.at(static_cast<std::size_t>(i - 1)); }

    bool has_plus() const {
        for (Sign s : signs)
            if (s == Sign::plus) return true;
        return false;
    }
    bool has_minus() const {
        for (Sign s : signs)
            if (s == Sign::minus) return true;
        return false;
    }

    std::string to_string() const {
        std::string t;
        for (Sign s : signs) t += static_cast<char>(s);
        return t;
    }

    bool operator==(const SignWord&) const = default;
};

/// Charges c_0..c_{2l} of the centered tiling: c_0 = 0,
/// c_{2k-1} - c_{2k-2} = 1 iff w_{2k-1} = +, c_{2k} - c_{2k-1} = 1 iff
/// w_{2k} = -.
inline std::vector<int> charges(const SignWord& w) {
    std::vector<int> c(static_cast<std::size_t>(w.length()) + 1, 0);
    for (int m = 1; m <= w.length(); ++m) {
        int step;
        if (m % 2 == 1)
            step = (w.at(m) == Sign::plus) ? 1 : 0;
        else
            step = (w.at(m) == Sign::plus) ? 0 : 1;
        c[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m - 1)] + step;
    }
    return c;
}

/// The interlacing relation linking lambda^(m-1) to lambda^(m): horizontal
/// on odd diagonals, vertical on even ones, direction by the sign.
inline std::vector<StripRelation> relations_for_word(const SignWord& w) {
    std::vector<StripRelation> rels;
    for (int m = 1; m <= w.length(); ++m) {
        bool horiz = (m % 2 == 1);
        bool plus = (w.at(m) == Sign::plus);
        if (horiz)
            rels.push_back(plus ? StripRelation::HPlus : StripRelation::HMinus);
        else
            rels.push_back(plus ? StripRelation::VPlus : StripRelation::VMinus);
    }
    return rels;
}

/// A word plus partitions lambda^(0)..lambda^(2l) satisfying the word's
/// interlacing pattern; the canonical finite encoding of a steep tiling.
struct InterlacedSeq {
    SignWord word;
    std::vector<Partition> lambdas;

    InterlacedSeq() = default;
    InterlacedSeq(SignWord w, std::vector<Partition> ls)
        : word(std::move(w)), lambdas(std::move(ls)) {}

    static InterlacedSeq all_empty(const SignWord& w) {
        return InterlacedSeq(w, std::vector<Partition>(static_cast<std::size_t>(w.length()) + 1));
    }

    const Partition& lambda(int m) const { return lambdas.at(static_cast<std::size_t>(m)); }

    bool is_pure() const { return lambdas.front().empty() && lambdas.back().empty(); }

    long long total_size() const {
        long long s = 0;
        for (const auto& l : lambdas) s += l.size();
        return s;
    }

    /// Empty on success, otherwise a message naming the violated relation.
    std::optional<std::string> violation() const {
        if (static_cast<int>(lambdas.size()) != word.length() + 1)
            return "sequence must hold exactly 2l+1 partitions";
        for (const auto& l : lambdas)
            if (!l.valid()) return "entry " + l.to_string() + " is not a partition";
        auto rels = relations_for_word(word);
        for (int m = 1; m <= word.length(); ++m) {
            StripRelation r = rels[static_cast<std::size_t>(m - 1)];
            if (!interlaced(lambda(m - 1), lambda(m), r))
                return "relation " + std::string(relation_name(r)) + " violated between lambda(" +
                       std::to_string(m - 1) + ") and lambda(" + std::to_string(m) + ")";
        }
        return std::nullopt;
    }

    void validate() const {
        if (auto v = violation()) throw std::invalid_argument("InterlacedSeq: " + *v);
    }

    bool operator==(const InterlacedSeq&) const = default;
};

enum class Going : char { north = 'N', east = 'E', south = 'S', west = 'W' };

inline bool going_empty_sites(Going g) { return g == Going::north || g == Going::east; }

/// Placed domino; (x,y) is the bottom-left corner.  A horizontal domino
/// covers [x,x+2] x [y,y+1], a vertical one [x,x+1] x [y,y+2].
struct Domino {
    int x = 0;
    int y = 0;
    bool horizontal = true;
    Going going = Going::north;

    auto operator<=>(const Domino&) const = default;

    /// The two covered sites, abscissa/ordinate doubled.
    std::pair<std::pair<int, int>, std::pair<int, int>> sites2() const {
        if (horizontal)
            return {{2 * x + 1, 2 * y + 1}, {2 * x + 3, 2 * y + 1}};
        return {{2 * x + 1, 2 * y + 1}, {2 * x + 1, 2 * y + 3}};
    }
};

inline Going going_of(bool horizontal, int x, int y) {
    bool even = ((x + y) % 2 + 2) % 2 == 0;
    if (horizontal) return even ? Going::north : Going::south;
    return even ? Going::west : Going::east;
}

/// Finite materialization of a steep tiling on the window |x| <= A.
struct TilingWindow {
    SignWord word;
    int half_width = 0;
    std::vector<Domino> dominos;  // sorted

    bool operator==(const TilingWindow&) const = default;
};

/// Smallest window half-width that contains all non-asymptotic structure
/// of the sequence (plus a margin of one).
inline int sufficient_half_width(const InterlacedSeq& s) {
    auto c = charges(s.word);
    int a = 2;
    for (int m = 0; m <= s.word.length(); ++m) {
        const Partition& l = s.lambda(m);
        a = std::max(a, l.cols() + c[static_cast<std::size_t>(m)] + 1);
        a = std::max(a, l.rows() - c[static_cast<std::size_t>(m)] + 1);
        int ab = c[static_cast<std::size_t>(m)];
        a = std::max(a, (ab < 0 ? -ab : ab) + 1);
    }
    return a;
}

/// Inverse half of the fundamental bijection: materialize the tiling of a
/// valid sequence on the window |x| <= A.  Dominos pair consecutive
/// occupied sites across even gaps and consecutive empty sites across odd
/// gaps, indexwise.
inline TilingWindow seq_to_tiling(const InterlacedSeq& s, int A) {
    s.validate();
    if (A < sufficient_half_width(s))
        throw std::invalid_argument("seq_to_tiling: window too small (need A >= " +
                                    std::to_string(sufficient_half_width(s)) + ")");
    auto c = charges(s.word);
    int ell = s.word.ell();
    std::vector<Domino> ds;

    auto maya = [&](int m) { return maya_from_partition(s.lambda(m), c[static_cast<std::size_t>(m)]); };

    // Even gaps (diagonals 2k-1, 2k): one domino per occupied pair.
    for (int k = 1; k <= ell; ++k) {
        MayaDiagram ma = maya(2 * k - 1), mb = maya(2 * k);
        for (int n = 1;; ++n) {
            long long xa2 = ma.occupied_twice(n), xb2 = mb.occupied_twice(n);
            if (std::max(xa2, xb2) < -2 * A) break;
            long long d2 = xb2 - xa2;
            if (d2 != 0 && d2 != 2)
                throw std::logic_error("seq_to_tiling: occupied pair misaligned");
            int x0 = static_cast<int>((xa2 - 1) / 2);
            Domino dom;
            if (d2 == 0) {
                dom = Domino{x0, x0 - 2 * k, false, Going::west};
            } else {
                int y0 = static_cast<int>((xa2 + 1) / 2) - 2 * k;
                dom = Domino{x0, y0, true, Going::south};
            }
            dom.going = going_of(dom.horizontal, dom.x, dom.y);
            ds.push_back(dom);
        }
    }
    // Odd gaps (diagonals 2k-2, 2k-1): one domino per empty pair.
    for (int k = 1; k <= ell; ++k) {
        MayaDiagram ma = maya(2 * k - 2), mb = maya(2 * k - 1);
        for (int n = 1;; ++n) {
            long long xa2 = ma.empty_twice(n), xb2 = mb.empty_twice(n);
            if (std::min(xa2, xb2) > 2 * A) break;
            long long d2 = xb2 - xa2;
            if (d2 != 0 && d2 != 2)
                throw std::logic_error("seq_to_tiling: empty pair misaligned");
            int xa = static_cast<int>((xa2 - 1) / 2);
            Domino dom;
            if (d2 == 0) {
                // vertical, sites on diagonals 2k-2 (top) and 2k-1 (bottom)
                dom = Domino{xa, xa - 2 * k + 1, false, Going::east};
            } else {
                dom = Domino{xa, static_cast<int>((xa2 + 1) / 2) - 2 * k + 1, true, Going::north};
            }
            dom.going = going_of(dom.horizontal, dom.x, dom.y);
            ds.push_back(dom);
        }
    }
    std::sort(ds.begin(), ds.end());
    return TilingWindow{s.word, A, std::move(ds)};
}

inline TilingWindow minimal_tiling(const SignWord& w, int A) {
    return seq_to_tiling(InterlacedSeq::all_empty(w), A);
}

namespace detail {

/// Site state map keyed by doubled coordinates; true = occupied.
struct SiteMap {
    std::map<std::pair<int, int>, bool> state;
    std::map<std::pair<int, int>, const Domino*> owner;
};

inline SiteMap build_sites(const TilingWindow& t) {
    SiteMap sm;
    for (const auto& d : t.dominos) {
        bool occ = !going_empty_sites(d.going);
        auto [s1, s2] = d.sites2();
        for (auto s : {s1, s2}) {
            if (sm.state.count(s))
                throw std::invalid_argument("malformed tiling: overlapping dominos at site");
            sm.state[s] = occ;
            sm.owner[s] = &d;
        }
    }
    return sm;
}

/// State of the site (x2, y2)/2, falling back to the boundary convention
/// for uncovered sites: occupied on y=x, empty on y=x-2l.
inline bool site_occupied(const SiteMap& sm, const TilingWindow& t, int x2, int y2) {
    auto it = sm.state.find({x2, y2});
    if (it != sm.state.end()) return it->second;
    int m2 = x2 - y2;
    if (m2 == 0) return true;
    if (m2 == 2 * t.word.length()) return false;
    throw std::invalid_argument("malformed tiling: uncovered interior site");
}

}  // namespace detail

/// Forward half of the fundamental bijection: read the particle
/// configuration of a window and decode one partition per diagonal.
inline InterlacedSeq tiling_to_seq(const TilingWindow& t) {
    auto sm = detail::build_sites(t);
    int A = t.half_width;
    int L = t.word.length();
    std::vector<Partition> lambdas;
    std::vector<int> cs;
    for (int m = 0; m <= L; ++m) {
        std::vector<long long> occ;
        for (int x2 = 2 * A - 1; x2 >= -2 * A + 1; x2 -= 2) {
            int y2 = x2 - 2 * m;
            if (detail::site_occupied(sm, t, x2, y2)) occ.push_back(x2);
        }
        if (occ.empty()) throw std::invalid_argument("tiling_to_seq: window too small");
        auto [lam, c] = partition_from_occupied_positions(occ);
        lambdas.push_back(lam);
        cs.push_back(c);
    }
    if (cs[0] != 0) throw std::invalid_argument("tiling_to_seq: tiling is not centered");
    InterlacedSeq s(t.word, std::move(lambdas));
    auto expect = charges(t.word);
    for (int m = 0; m <= L; ++m)
        if (cs[static_cast<std::size_t>(m)] != expect[static_cast<std::size_t>(m)])
            throw std::invalid_argument("tiling_to_seq: charges disagree with the word at diagonal " +
                                        std::to_string(m));
    s.validate();
    if (sufficient_half_width(s) > A)
        throw std::invalid_argument("tiling_to_seq: window too small for its own content");
    return s;
}

/// Recover the word from the periodic patterns near the window edges:
/// the topmost empty site of each odd diagonal and the bottommost occupied
/// site of each even diagonal show the asymptotic domino type.
inline SignWord asymptotic_data(const TilingWindow& t) {
    auto sm = detail::build_sites(t);
    int A = t.half_width;
    int L = t.word.length();
    if (A < 2) throw std::invalid_argument("asymptotic_data: window too narrow");
    std::vector<Sign> out;
    for (int m = 1; m <= L; ++m) {
        if (m % 2 == 1) {
            int x2 = 2 * A - 1, y2 = x2 - 2 * m;
            if (detail::site_occupied(sm, t, x2, y2))
                throw std::invalid_argument("asymptotic_data: window too narrow to stabilize");
            const Domino* d = sm.owner.at({x2, y2});
            out.push_back(d->horizontal ? Sign::plus : Sign::minus);
        } else {
            int x2 = -2 * A + 1, y2 = x2 - 2 * m;
            if (!detail::site_occupied(sm, t, x2, y2))
                throw std::invalid_argument("asymptotic_data: window too narrow to stabilize");
            const Domino* d = sm.owner.at({x2, y2});
            out.push_back(d->horizontal ? Sign::minus : Sign::plus);
        }
    }
    return SignWord(std::move(out));
}

/// Uncovered boundary squares within the window (doubled abscissas):
/// occupied sites of diagonal 0 and empty sites of diagonal 2l.
inline std::pair<std::vector<int>, std::vector<int>> uncovered_boundary2(const TilingWindow& t) {
    auto sm = detail::build_sites(t);
    int A = t.half_width, L = t.word.length();
    std::vector<int> low, high;
    for (int x2 = -2 * A + 1; x2 <= 2 * A - 1; x2 += 2) {
        if (!sm.state.count({x2, x2}) && detail::site_occupied(sm, t, x2, x2)) low.push_back(x2);
        if (!sm.state.count({x2, x2 - 2 * L}) && !detail::site_occupied(sm, t, x2, x2 - 2 * L))
            high.push_back(x2);
    }
    return {low, high};
}

/// Height function on the window's integer points 0 <= x-y <= 2l,
/// |x| <= A, normalized by h_0 = 0 (hence H(0,0) = 0 on the minimal
/// tiling).  The offsets h_m follow h_{m-1} - h_m = 1 iff w_m = +, the
/// reading fixed by requiring H(minimal) = 2|x - c_m| + h_m exactly.
struct HeightField {
    int half_width = 0;
    std::vector<int> offsets;                 // h_m
    std::vector<std::vector<long long>> grid;  // grid[m][x + A]

    long long at(int x, int m) const {
        return grid.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(x + half_width));
    }
};

inline HeightField height_function(const TilingWindow& t) {
    auto sm = detail::build_sites(t);
    int A = t.half_width, L = t.word.length();
    auto c = charges(t.word);
    HeightField hf;
    hf.half_width = A;
    hf.offsets.assign(static_cast<std::size_t>(L) + 1, 0);
    for (int m = 1; m <= L; ++m)
        hf.offsets[static_cast<std::size_t>(m)] =
            hf.offsets[static_cast<std::size_t>(m - 1)] - sign_value(t.word.at(m));

    hf.grid.assign(static_cast<std::size_t>(L) + 1, std::vector<long long>(2 * A + 1, 0));
    for (int m = 0; m <= L; ++m) {
        long long h = 2LL * (A - c[static_cast<std::size_t>(m)]) + hf.offsets[static_cast<std::size_t>(m)];
        hf.grid[static_cast<std::size_t>(m)][static_cast<std::size_t>(2 * A)] = h;
        for (int x = A; x > -A; --x) {
            bool occ = detail::site_occupied(sm, t, 2 * x - 1, 2 * x - 1 - 2 * m);
            h -= occ ? -2 : 2;
            hf.grid[static_cast<std::size_t>(m)][static_cast<std::size_t>(x - 1 + A)] = h;
        }
    }

    // Cross-check every lattice edge: oriented steps take values in {1,-3},
    // with -3 exactly when the edge crosses a domino.  Horizontal edges are
    // emitted by their odd endpoint, vertical edges by their even one.
    std::set<std::pair<int, int>> vert, horiz;
    for (const auto& d : t.dominos)
        (d.horizontal ? horiz : vert).insert({d.x, d.y});
    for (int m = 0; m < L; ++m) {
        for (int x = -A; x < A; ++x) {
            // edge {(x, x-m), (x+1, x-m)} linking diagonals m and m+1
            int y = x - m;
            bool crossing = vert.count({x, y - 1}) > 0;
            long long hu = hf.at(x, m), hv = hf.at(x + 1, m + 1);
            long long diff = (m % 2 == 1) ? hv - hu : hu - hv;
            if (diff != (crossing ? -3 : 1))
                throw std::invalid_argument("malformed tiling: height step broken on a horizontal edge");
        }
        for (int x = -A; x <= A; ++x) {
            // edge {(x, x-m), (x, x-m-1)} linking diagonals m and m+1
            int y = x - m - 1;
            bool crossing = horiz.count({x - 1, y}) > 0;
            long long hu = hf.at(x, m), hv = hf.at(x, m + 1);
            long long diff = (m % 2 == 0) ? hv - hu : hu - hv;
            if (diff != (crossing ? -3 : 1))
                throw std::invalid_argument("malformed tiling: height step broken on a vertical edge");
        }
    }
    return hf;
}

/// Minimal-height comparison: sum over the common window of |H - H_min|/4,
/// which equals the flip distance for centered tilings.
inline long long height_distance(const InterlacedSeq& s, int A) {
    TilingWindow t = seq_to_tiling(s, A);
    TilingWindow tmin = minimal_tiling(s.word, A);
    HeightField h = height_function(t), hmin = height_function(tmin);
    long long total = 0;
    for (int m = 0; m <= s.word.length(); ++m)
        for (int x = -A; x <= A; ++x) {
            long long d = h.at(x, m) - hmin.at(x, m);
            total += d < 0 ? -d : d;
        }
    if (total % 4 != 0) throw std::logic_error("height_distance: sum not divisible by 4");
    return total / 4;
}

enum class FlipDir { up, down };
enum class BoundaryMode { pure, free, periodic };

struct FlipOutcome {
    bool ok = false;
    InterlacedSeq seq;
    std::string violation;
};

/// Apply an elementary flip: change lambda^(m)_row by +-1.  Boundary
/// diagonals m = 0, 2l are rejected in pure mode, allowed in free mode,
/// and paired (both ends together) in periodic mode.
inline FlipOutcome flip_seq(const InterlacedSeq& s, int m, int row, FlipDir dir,
                            BoundaryMode mode = BoundaryMode::pure) {
    FlipOutcome out;
    int L = s.word.length();
    if (m < 0 || m > L) {
        out.violation = "diagonal index out of range";
        return out;
    }
    bool boundary = (m == 0 || m == L);
    if (boundary && mode == BoundaryMode::pure) {
        out.violation = "boundary flip not allowed in pure mode";
        return out;
    }
    auto rels = relations_for_word(s.word);
    auto apply_one = [&](std::vector<Partition>& ls, int mm) -> std::optional<std::string> {
        std::vector<int> parts = ls[static_cast<std::size_t>(mm)].parts;
        int delta = (dir == FlipDir::up) ? 1 : -1;
        if (row < 1) return std::string("row index out of range");
        if (row > static_cast<int>(parts.size())) {
            if (row != static_cast<int>(parts.size()) + 1 || delta != 1)
                return std::string("row index out of range");
            parts.push_back(1);
        } else {
            parts[static_cast<std::size_t>(row - 1)] += delta;
        }
        Partition cand(parts);
        if (!cand.valid())
            return std::string("flip breaks monotonicity of lambda(") + std::to_string(mm) + ")";
        ls[static_cast<std::size_t>(mm)] = cand;
        return std::nullopt;
    };

    std::vector<Partition> ls = s.lambdas;
    if (auto err = apply_one(ls, m)) {
        out.violation = *err;
        return out;
    }
    if (boundary && mode == BoundaryMode::periodic) {
        int other = (m == 0) ? L : 0;
        if (s.lambda(0) != s.lambda(L)) {
            out.violation = "periodic flip requires equal end partitions";
            return out;
        }
        if (auto err = apply_one(ls, other)) {
            out.violation = *err;
            return out;
        }
    }
    InterlacedSeq cand(s.word, std::move(ls));
    for (int mm = std::max(1, m - 1); mm <= std::min(L, m + 1); ++mm) {
        StripRelation r = rels[static_cast<std::size_t>(mm - 1)];
        if (!interlaced(cand.lambda(mm - 1), cand.lambda(mm), r)) {
            out.violation = "relation " + std::string(relation_name(r)) + " violated between lambda(" +
                            std::to_string(mm - 1) + ") and lambda(" + std::to_string(mm) + ")";
            return out;
        }
    }
    if (boundary && mode == BoundaryMode::periodic) {
        int other = (m == 0) ? L : 0;
        for (int mm = std::max(1, other); mm <= std::min(L, other + 1); ++mm) {
            StripRelation r = rels[static_cast<std::size_t>(mm - 1)];
            if (!interlaced(cand.lambda(mm - 1), cand.lambda(mm), r)) {
                out.violation = "relation " + std::string(relation_name(r)) + " violated between lambda(" +
                                std::to_string(mm - 1) + ") and lambda(" + std::to_string(mm) + ")";
                return out;
            }
        }
    }
    out.ok = true;
    out.seq = std::move(cand);
    return out;
}

inline long long flip_distance(const InterlacedSeq& s) { return s.total_size(); }

inline std::vector<long long> per_diagonal_flips(const InterlacedSeq& s) {
    std::vector<long long> v;
    for (const auto& l : s.lambdas) v.push_back(l.size());
    return v;
}

/// All sequences interlaced along `rels` from alpha to beta with total
/// partition size at most max_total.
inline std::vector<std::vector<Partition>> enumerate_sequences(
    const std::vector<StripRelation>& rels, const Partition& alpha, const Partition& beta,
    long long max_total) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur{alpha};
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long used) {
        if (i == rels.size()) {
            if (cur.back() == beta) out.push_back(cur);
            return;
        }
        for (const auto& nxt : forward_extensions(cur.back(), rels[i], max_total - used)) {
            cur.push_back(nxt);
            rec(i + 1, used + nxt.size());
            cur.pop_back();
        }
    };
    if (alpha.size() <= max_total) rec(0, alpha.size());
    return out;
}

inline std::vector<InterlacedSeq> enumerate_pure_sequences(const SignWord& w, long long max_total) {
    std::vector<InterlacedSeq> out;
    for (auto& ls : enumerate_sequences(relations_for_word(w), Partition{}, Partition{}, max_total))
        out.emplace_back(w, std::move(ls));
    return out;
}

/// Breadth-first flip distances over pure sequences with total size bound;
/// keyed by the partition tuple.
inline std::map<std::vector<Partition>, int> bfs_flip_distances(const SignWord& w,
                                                                long long max_total) {
    std::map<std::vector<Partition>, int> dist;
    InterlacedSeq start = InterlacedSeq::all_empty(w);
    dist[start.lambdas] = 0;
    std::queue<InterlacedSeq> todo;
    todo.push(start);
    int L = w.length();
    while (!todo.empty()) {
        InterlacedSeq s = todo.front();
        todo.pop();
        int d = dist[s.lambdas];
        for (int m = 1; m < L; ++m) {
            int rows = s.lambda(m).rows();
            for (int row = 1; row <= rows + 1; ++row) {
                for (FlipDir dir : {FlipDir::up, FlipDir::down}) {
                    if (dir == FlipDir::down && row > rows) continue;
                    auto res = flip_seq(s, m, row, dir, BoundaryMode::pure);
                    if (!res.ok) continue;
                    if (res.seq.total_size() > max_total) continue;
                    if (dist.count(res.seq.lambdas)) continue;
                    dist[res.seq.lambdas] = d + 1;
                    todo.push(res.seq);
                }
            }
        }
    }
    return dist;
}

/// Aztec-diamond confinement report for pure sequences with word (+-)^l:
/// lambda^(2k-1), lambda^(2k) fit in k rows and lambda^(2k-1),
/// lambda^(2k-2) in l+1-k columns.
struct AztecReport {
    bool ok = false;
    std::string detail;
};

inline AztecReport aztec_adapter(int ell, const InterlacedSeq& s) {
    AztecReport rep;
    if (s.word != SignWord::repeat("+-", ell)) {
        rep.detail = "word is not (+-)^" + std::to_string(ell);
        return rep;
    }
    if (auto v = s.violation()) {
        rep.detail = *v;
        return rep;
    }
    if (!s.is_pure()) {
        rep.detail = "sequence is not pure";
        return rep;
    }
    for (int k = 1; k <= ell; ++k) {
        if (s.lambda(2 * k - 1).rows() > k || s.lambda(2 * k).rows() > k) {
            rep.detail = "row bound violated near diagonal " + std::to_string(2 * k);
            return rep;
        }
        if (s.lambda(2 * k - 1).cols() > ell + 1 - k || s.lambda(2 * k - 2).cols() > ell + 1 - k) {
            rep.detail = "column bound violated near diagonal " + std::to_string(2 * k - 1);
            return rep;
        }
    }
    rep.ok = true;
    rep.detail = "confined to the Aztec diamond of order " + std::to_string(ell);
    return rep;
}

/// Plane overpartition: rows of (entry, overlined) pairs.
struct PlaneOverpartition {
    std::vector<std::vector<std::pair<int, bool>>> rows;

    bool operator==(const PlaneOverpartition&) const = default;
};

/// Encode a plane overpartition with entries <= l as the sequence for the
/// word +^{2l}: the horizontal strip at stage 2i-1 carries the
/// non-overlined entries equal to l+1-i, the vertical strip at stage 2i
/// the overlined ones.
inline InterlacedSeq overpartition_to_seq(const PlaneOverpartition& op, int ell) {
    SignWord w = SignWord::repeat("+", 2 * ell);
    std::vector<Partition> ls{Partition{}};
    for (int i = 1; i <= ell; ++i) {
        int value = ell + 1 - i;
        for (bool overlined : {false, true}) {
            std::vector<int> parts = ls.back().parts;
            parts.resize(op.rows.size(), 0);
            for (std::size_t r = 0; r < op.rows.size(); ++r) {
                for (std::size_t ccol = 0; ccol < op.rows[r].size(); ++ccol) {
                    auto [v, ov] = op.rows[r][ccol];
                    if (v == value && ov == overlined) {
                        if (static_cast<int>(ccol) != parts[r])
                            throw std::invalid_argument(
                                "overpartition_to_seq: entries of value " + std::to_string(value) +
                                " do not extend the shape in row " + std::to_string(r + 1));
                        parts[r] += 1;
                    }
                }
            }
            Partition next(parts);
            if (!next.valid())
                throw std::invalid_argument("overpartition_to_seq: slice is not a partition");
            StripRelation fwd = overlined ? StripRelation::VPlus : StripRelation::HPlus;
            if (!interlaced(ls.back(), next, fwd))
                throw std::invalid_argument(std::string("overpartition_to_seq: ") +
                                            (overlined ? "overlined" : "non-overlined") +
                                            " entries of value " + std::to_string(value) +
                                            " do not form a " + (overlined ? "vertical" : "horizontal") +
                                            " strip");
            ls.push_back(next);
        }
    }
    InterlacedSeq s(w, std::move(ls));
    s.validate();
    return s;
}

/// Inverse reading: recover entries and overlines from the strips.
inline PlaneOverpartition seq_to_overpartition(const InterlacedSeq& s) {
    int L = s.word.length();
    if (s.word != SignWord::repeat("+", L))
        throw std::invalid_argument("seq_to_overpartition: word must be all +");
    if (!s.lambda(0).empty())
        throw std::invalid_argument("seq_to_overpartition: sequence must start at the empty partition");
    int ell = L / 2;
    const Partition& shape = s.lambda(L);
    PlaneOverpartition op;
    op.rows.assign(static_cast<std::size_t>(shape.rows()), {});
    for (int r = 1; r <= shape.rows(); ++r)
        op.rows[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)),
                                                        {0, false});
    for (int i = 1; i <= ell; ++i) {
        int value = ell + 1 - i;
        for (int stage = 2 * i - 1; stage <= 2 * i; ++stage) {
            bool overlined = (stage % 2 == 0);
            const Partition& prev = s.lambda(stage - 1);
            const Partition& next = s.lambda(stage);
            for (int r = 1; r <= next.rows(); ++r)
                for (int cc = prev.part(r) + 1; cc <= next.part(r); ++cc)
                    op.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(cc - 1)] =
                        {value, overlined};
        }
    }
    return op;
}

}  // namespace oblique
