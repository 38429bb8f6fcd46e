#pragma once

// Integer partitions, conjugation, the four interlacing (strip) relations,
// Maya diagrams with charge, and bounded enumeration utilities.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oblique {

/// Integer partition stored as a trimmed, weakly decreasing sequence of
/// positive parts.  The empty sequence is the empty partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    bool valid() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
        }
        return true;
    }

    bool empty() const { return parts.empty(); }
    int rows() const { return static_cast<int>(parts.size()); }
    int cols() const { return parts.empty() ? 0 : parts[0]; }

    /// Part with zero extension: part(i) = 0 for i > rows(), 1-indexed.
    int part(int i) const {
        if (i < 1 || i > rows()) return 0;
        return parts[static_cast<std::size_t>(i - 1)];
    }

    long long size() const {
        long long s = 0;
        for (int p : parts) s += p;
        return s;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const {
        if (parts.empty()) return "[]";
        std::string s = "[";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }
};

inline Partition conjugate(const Partition& lam) {
    std::vector<int> out;
    for (int n = 1; n <= lam.cols(); ++n) {
        int count = 0;
        for (int p : lam.parts)
            if (p >= n) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

/// Canonical enumeration order: by size, then parts lexicographically
/// descending (so [2] comes before [1,1]).
inline bool enum_less(const Partition& a, const Partition& b) {
    long long sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(b.parts.begin(), b.parts.end(),
                                        a.parts.begin(), a.parts.end());
}

/// The four interlacing relations between consecutive partitions.
/// HPlus means "first precedes second through a horizontal strip":
/// interlaced(mu, lam, HPlus) holds iff lam/mu is a horizontal strip.
/// VPlus/VMinus are the vertical-strip analogues (primed relations).
enum class StripRelation : std::uint8_t { HPlus, HMinus, VPlus, VMinus };

inline StripRelation swap_direction(StripRelation r) {
    switch (r) {
        case StripRelation::HPlus: return StripRelation::HMinus;
        case StripRelation::HMinus: return StripRelation::HPlus;
        case StripRelation::VPlus: return StripRelation::VMinus;
        case StripRelation::VMinus: return StripRelation::VPlus;
    }
    throw std::logic_error("bad StripRelation");
}

inline bool grows(StripRelation r) {
    return r == StripRelation::HPlus || r == StripRelation::VPlus;
}

inline bool is_horizontal(StripRelation r) {
    return r == StripRelation::HPlus || r == StripRelation::HMinus;
}

inline const char* relation_name(StripRelation r) {
    switch (r) {
        case StripRelation::HPlus: return "h+";
        case StripRelation::HMinus: return "h-";
        case StripRelation::VPlus: return "v+";
        case StripRelation::VMinus: return "v-";
    }
    return "?";
}

namespace detail {

// mu <h lam: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
inline bool horizontally_interlaced(const Partition& mu, const Partition& lam) {
    int n = std::max(mu.rows(), lam.rows());
    for (int i = 1; i <= n; ++i) {
        if (lam.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lam.part(i + 1)) return false;
    }
    return true;
}

// mu <v lam: lam_i - mu_i in {0,1} for all i.
inline bool vertically_interlaced(const Partition& mu, const Partition& lam) {
    int n = std::max(mu.rows(), lam.rows());
    for (int i = 1; i <= n; ++i) {
        int d = lam.part(i) - mu.part(i);
        if (d < 0 || d > 1) return false;
    }
    return true;
}

}  // namespace detail

inline bool interlaced(const Partition& mu, const Partition& lam, StripRelation rel) {
    switch (rel) {
        case StripRelation::HPlus: return detail::horizontally_interlaced(mu, lam);
        case StripRelation::HMinus: return detail::horizontally_interlaced(lam, mu);
        case StripRelation::VPlus: return detail::vertically_interlaced(mu, lam);
        case StripRelation::VMinus: return detail::vertically_interlaced(lam, mu);
    }
    return false;
}

namespace detail {

// All mu with mu <h lam; mu_i ranges freely in [lam_{i+1}, lam_i].
inline void horizontal_predecessors(const Partition& lam, long long max_size,
                                    std::vector<Partition>& out) {
    std::vector<int> cur;
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i > lam.rows()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lam.part(i); v >= lam.part(i + 1); --v) {
            if (used + v > max_size && v > 0) continue;
            cur.push_back(v);
            rec(i + 1, used + v);
            cur.pop_back();
        }
    };
    rec(1, 0);
}

// All mu with lam <h mu and |mu| <= max_size; mu_1 >= lam_1, mu_i in
// [lam_i, lam_{i-1}] for i >= 2, at most rows(lam)+1 rows.
inline void horizontal_successors(const Partition& lam, long long max_size,
                                  std::vector<Partition>& out) {
    if (lam.size() > max_size) return;
    std::vector<int> cur;
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i > lam.rows() + 1) {
            out.emplace_back(cur);
            return;
        }
        long long rest = 0;
        for (int j = i; j <= lam.rows(); ++j) rest += lam.part(j);
        if (used + rest > max_size) return;
        int lo = lam.part(i);  // 0 on the optional extra row
        int hi = (i == 1) ? lam.part(1) + static_cast<int>(max_size - lam.size())
                          : lam.part(i - 1);
        for (int v = lo; v <= hi; ++v) {
            if (used + v > max_size) break;
            if (v == 0) {
                rec(i + 1, used);  // omit the extra row
                continue;
            }
            cur.push_back(v);
            rec(i + 1, used + v);
            cur.pop_back();
        }
    };
    rec(1, 0);
}

// All mu with mu <v lam: mu_i = lam_i - b_i, b_i in {0,1}, monotone.
inline void vertical_predecessors(const Partition& lam, long long max_size,
                                  std::vector<Partition>& out) {
    std::vector<int> cur;
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i > lam.rows()) {
            out.emplace_back(cur);
            return;
        }
        for (int b = 0; b <= 1; ++b) {
            int v = lam.part(i) - b;
            if (v < 0) continue;
            if (!cur.empty() && cur.back() < v) continue;
            if (used + v > max_size && v > 0) continue;
            cur.push_back(v);
            rec(i + 1, used + v);
            cur.pop_back();
        }
    };
    rec(1, 0);
}

// All mu with lam <v mu and |mu| <= max_size: mu_i = lam_i + b_i over the
// rows of lam, then any run of trailing 1s.
inline void vertical_successors(const Partition& lam, long long max_size,
                                std::vector<Partition>& out) {
    if (lam.size() > max_size) return;
    std::vector<int> cur;
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i > lam.rows()) {
            out.emplace_back(cur);
            long long extra = max_size - used;
            std::vector<int> ext = cur;
            for (long long t = 1; t <= extra; ++t) {
                ext.push_back(1);
                out.emplace_back(ext);
            }
            return;
        }
        for (int b = 0; b <= 1; ++b) {
            int v = lam.part(i) + b;
            if (!cur.empty() && cur.back() < v) continue;
            if (used + v > max_size) continue;
            cur.push_back(v);
            rec(i + 1, used + v);
            cur.pop_back();
        }
    };
    rec(1, 0);
}

}  // namespace detail

/// All mu with interlaced(mu, lam, rel) and |mu| <= max_size, in canonical
/// enumeration order.  For the Minus relations the result is infinite
/// without the size bound.
inline std::vector<Partition> strip_extensions(const Partition& lam, StripRelation rel,
                                               long long max_size) {
    if (max_size < 0) throw std::invalid_argument("strip_extensions: max_size < 0");
    std::vector<Partition> out;
    switch (rel) {
        case StripRelation::HPlus: detail::horizontal_predecessors(lam, max_size, out); break;
        case StripRelation::HMinus: detail::horizontal_successors(lam, max_size, out); break;
        case StripRelation::VPlus: detail::vertical_predecessors(lam, max_size, out); break;
        case StripRelation::VMinus: detail::vertical_successors(lam, max_size, out); break;
    }
    std::sort(out.begin(), out.end(), enum_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All nu with interlaced(lam, nu, rel): the partitions lam can step to
/// when it is the left member of the relation.
inline std::vector<Partition> forward_extensions(const Partition& lam, StripRelation rel,
                                                 long long max_size) {
    return strip_extensions(lam, swap_direction(rel), max_size);
}

/// All partitions of size <= n, each once, in canonical enumeration order.
inline std::vector<Partition> partitions_up_to(long long n) {
    if (n < 0) throw std::invalid_argument("partitions_up_to: n < 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(long long, int)> rec = [&](long long k, int maxpart) {
        if (k == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = static_cast<int>(std::min<long long>(k, maxpart)); p >= 1; --p) {
            cur.push_back(p);
            rec(k - p, p);
            cur.pop_back();
        }
    };
    for (long long k = 0; k <= n; ++k) rec(k, static_cast<int>(k));
    std::sort(out.begin(), out.end(), enum_less);
    return out;
}

/// Maya diagram: the bi-infinite occupied/empty pattern of one diagonal,
/// stored finitely as a charge plus the partition it codes.  Occupied
/// positions are the half-integers lambda_n - n + 1/2 + charge, n >= 1.
struct MayaDiagram {
    int charge = 0;
    Partition lambda;

    bool operator==(const MayaDiagram&) const = default;

    /// Twice the n-th occupied position (positions are half-integers; the
    /// doubled value is an odd integer), n >= 1.
    long long occupied_twice(int n) const {
        return 2LL * (lambda.part(n) - n + charge) + 1;
    }

    /// Twice the n-th empty position: -conj(lambda)_n + n - 1/2 + charge.
    long long empty_twice(int n) const {
        Partition c = conjugate(lambda);
        return 2LL * (-c.part(n) + n + charge) - 1;
    }
};

inline MayaDiagram maya_from_partition(const Partition& lam, int charge) {
    return MayaDiagram{charge, lam};
}

inline std::pair<Partition, int> partition_from_maya(const MayaDiagram& m) {
    return {m.lambda, m.charge};
}

/// Rebuild a partition from the descending occupied positions (doubled) of
/// one diagonal, given that below the listed range the diagonal is fully
/// occupied (vacuum continuation).  Returns (partition, charge).
inline std::pair<Partition, int> partition_from_occupied_positions(
    const std::vector<long long>& occupied_twice_desc) {
    if (occupied_twice_desc.empty())
        throw std::invalid_argument("partition_from_occupied_positions: empty view");
    // Deep positions follow x2_n = 2(c - n) + 1; read the charge off the last.
    int n_last = static_cast<int>(occupied_twice_desc.size());
    long long x2 = occupied_twice_desc.back();
    if ((x2 & 1) == 0) throw std::invalid_argument("occupied positions must be half-integers");
    long long charge = (x2 - 1) / 2 + n_last;
    std::vector<int> parts;
    for (int n = 1; n <= n_last; ++n) {
        long long p = (occupied_twice_desc[static_cast<std::size_t>(n - 1)] - 1) / 2 + n - charge;
        if (p < 0) throw std::invalid_argument("positions do not code a partition");
        parts.push_back(static_cast<int>(p));
    }
    Partition lam(parts);
    if (!lam.valid() && !lam.parts.empty())
        throw std::invalid_argument("positions do not code a partition");
    return {lam, static_cast<int>(charge)};
}

}  // namespace oblique
