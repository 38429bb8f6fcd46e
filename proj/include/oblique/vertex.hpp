#pragma once

// Vertex operators acting on truncated partition-indexed states, and the
// partition functions (pure, prescribed, mixed, free, cylindric) computed
// by direct operator application.  This is the oracle side of the library:
// everything here enumerates strips explicitly and never touches the
// closed-form products.

#include "partition.hpp"
#include "series.hpp"
#include "steep.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oblique {

template <class S>
using StateVector = std::map<Partition, S>;

/// Gamma_{sign}(coeff * x^arg), primed for the vertical-strip variant.
struct OperatorSpec {
    Sign sign = Sign::plus;
    bool primed = false;
    Exponents arg;
    int coeff = 1;  // +1 or -1, the sign carried by the argument
};

namespace detail {

template <class S>
void normalize_state(StateVector<S>& st) {
    for (auto it = st.begin(); it != st.end();) {
        bool zero;
        if constexpr (std::is_same_v<S, UniSeries>)
            zero = it->second.is_zero();
        else
            zero = it->second.terms().empty();
        it = zero ? st.erase(it) : std::next(it);
    }
}

}  // namespace detail

/// Apply a vertex operator to a ket state:
/// Gamma_+(t)|lam> = sum_{mu prec lam} t^{|lam|-|mu|} |mu>,
/// Gamma_-(t)|lam> = sum_{mu succ lam} t^{|mu|-|lam|} |mu>,
/// primed versions over vertical strips.  Partitions above max_size are
/// dropped (their amplitudes grade past the truncation in every use).
inline StateVector<MultiSeries> apply(const OperatorSpec& op, const StateVector<MultiSeries>& st,
                                      long long max_size) {
    StateVector<MultiSeries> out;
    StripRelation rel = op.sign == Sign::plus
                            ? (op.primed ? StripRelation::VPlus : StripRelation::HPlus)
                            : (op.primed ? StripRelation::VMinus : StripRelation::HMinus);
    for (const auto& [lam, amp] : st) {
        for (const auto& mu : strip_extensions(lam, rel, max_size)) {
            long long k = op.sign == Sign::plus ? lam.size() - mu.size() : mu.size() - lam.size();
            Exponents e(op.arg.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = op.arg[i] * static_cast<int>(k);
            Int c = (op.coeff < 0 && k % 2 == 1) ? Int(-1) : Int(1);
            MultiSeries term = amp.shifted(e, c);
            if (term.terms().empty()) continue;
            auto it = out.find(mu);
            if (it == out.end())
                out.emplace(mu, std::move(term));
            else
                it->second += term;
        }
    }
    detail::normalize_state(out);
    return out;
}

/// Apply a vertex operator to a bra state: <mu|Gamma_-(t) spreads to the
/// smaller partitions, <mu|Gamma_+(t) to the larger ones, with the same
/// strip-size exponents.
inline StateVector<MultiSeries> apply_to_bra(const OperatorSpec& op,
                                             const StateVector<MultiSeries>& st,
                                             long long max_size) {
    StateVector<MultiSeries> out;
    StripRelation rel = op.sign == Sign::plus
                            ? (op.primed ? StripRelation::VMinus : StripRelation::HMinus)
                            : (op.primed ? StripRelation::VPlus : StripRelation::HPlus);
    for (const auto& [mu, amp] : st) {
        for (const auto& lam : strip_extensions(mu, rel, max_size)) {
            long long k = mu.size() - lam.size();
            if (k < 0) k = -k;
            Exponents e(op.arg.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = op.arg[i] * static_cast<int>(k);
            Int c = (op.coeff < 0 && k % 2 == 1) ? Int(-1) : Int(1);
            MultiSeries term = amp.shifted(e, c);
            if (term.terms().empty()) continue;
            auto it = out.find(lam);
            if (it == out.end())
                out.emplace(lam, std::move(term));
            else
                it->second += term;
        }
    }
    detail::normalize_state(out);
    return out;
}

namespace detail {

/// Right-to-left sweep with q-grading: starting from the given state of
/// lambda^(k) amplitudes, process the relations from the last to the
/// first, multiplying by q^{|lambda^(i)|} when stage i is consumed.  The
/// returned map holds the lambda^(0) amplitudes.
inline StateVector<UniSeries> sweep_q(const std::vector<StripRelation>& rels,
                                      StateVector<UniSeries> state, int N) {
    for (int i = static_cast<int>(rels.size()); i >= 1; --i) {
        StateVector<UniSeries> nxt;
        for (const auto& [lam, amp] : state) {
            UniSeries weighted = amp.shifted(static_cast<int>(lam.size()));
            if (weighted.is_zero()) continue;
            for (const auto& mu : strip_extensions(lam, rels[static_cast<std::size_t>(i - 1)], N)) {
                auto it = nxt.find(mu);
                if (it == nxt.end())
                    nxt.emplace(mu, weighted);
                else
                    it->second += weighted;
            }
        }
        state = std::move(nxt);
    }
    return state;
}

/// Same sweep with one ambient variable list; stage i adds exponent
/// |lambda^(i)| to coordinate var_of_stage[i-1] (negative = no grading).
inline StateVector<MultiSeries> sweep_multi(const std::vector<StripRelation>& rels,
                                            StateVector<MultiSeries> state,
                                            const std::vector<int>& var_of_stage,
                                            long long max_size) {
    for (int i = static_cast<int>(rels.size()); i >= 1; --i) {
        StateVector<MultiSeries> nxt;
        for (const auto& [lam, amp] : state) {
            MultiSeries weighted = amp;
            int v = var_of_stage[static_cast<std::size_t>(i - 1)];
            if (v >= 0 && lam.size() > 0) {
                Exponents e(amp.vars().size(), 0);
                e[static_cast<std::size_t>(v)] = static_cast<int>(lam.size());
                weighted = amp.shifted(e);
            }
            if (weighted.terms().empty()) continue;
            for (const auto& mu : strip_extensions(lam, rels[static_cast<std::size_t>(i - 1)], max_size)) {
                auto it = nxt.find(mu);
                if (it == nxt.end())
                    nxt.emplace(mu, weighted);
                else
                    it->second += weighted;
            }
        }
        state = std::move(nxt);
    }
    return state;
}

inline std::vector<std::string> stage_vars(const std::string& stem, int count) {
    std::vector<std::string> v;
    for (int i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

}  // namespace detail

/// Generating function of pure sequences for the word w, graded by the
/// total partition size (= flip distance), to order N.
inline UniSeries pure_fn(const SignWord& w, int N) {
    StateVector<UniSeries> st;
    st.emplace(Partition{}, UniSeries::one(N));
    auto res = detail::sweep_q(relations_for_word(w), std::move(st), N);
    auto it = res.find(Partition{});
    return it == res.end() ? UniSeries(N) : it->second;
}

/// Multivariate refinement: exponent of x_i = |lambda^(i)|, i = 1..2l-1
/// (the last stage is pure and carries no variable), total degree <= N.
inline MultiSeries pure_fn_multi(const SignWord& w, int N) {
    auto vars = detail::stage_vars("x", w.length() - 1);
    StateVector<MultiSeries> st;
    st.emplace(Partition{}, MultiSeries::one(vars, N));
    std::vector<int> var_of_stage(static_cast<std::size_t>(w.length()), -1);
    for (int i = 1; i <= w.length() - 1; ++i) var_of_stage[static_cast<std::size_t>(i - 1)] = i - 1;
    auto res = detail::sweep_multi(relations_for_word(w), std::move(st), var_of_stage, N);
    auto it = res.find(Partition{});
    return it == res.end() ? MultiSeries(vars, N) : it->second;
}

/// <alpha| prod Gamma |beta> at the principal specialization x_i = q, with
/// the exponent of q recording sum_i (|lambda^(i)| - |alpha|).  Rejects
/// instances whose grading would need negative exponents.
inline UniSeries prescribed_fn(const SignWord& w, const Partition& alpha, const Partition& beta,
                               int N) {
    long long shift = static_cast<long long>(w.length()) * alpha.size();
    int wide = N + static_cast<int>(shift);
    StateVector<UniSeries> st;
    st.emplace(beta, UniSeries::one(wide));
    auto res = detail::sweep_q(relations_for_word(w), std::move(st), wide);
    auto it = res.find(alpha);
    UniSeries raw = it == res.end() ? UniSeries(wide) : it->second;
    UniSeries out(N);
    for (int d = 0; d <= wide; ++d) {
        if (raw.coeff(d) == 0) continue;
        long long dd = d - shift;
        if (dd < 0)
            throw std::invalid_argument("prescribed_fn: negative exponent under the Lemma grading");
        if (dd <= N) out.at(static_cast<int>(dd)) += raw.coeff(d);
    }
    return out;
}

/// Mixed (pure-free) partition function: sum over the right boundary
/// partition beta, marked by v^{|beta|}; q grades the flip distance.
inline MultiSeries mixed_fn_marked(const SignWord& w, int N) {
    std::vector<std::string> vars{"q", "v"};
    std::vector<int> weights{1, 0};
    StateVector<MultiSeries> st;
    for (const auto& beta : partitions_up_to(N)) {
        MultiSeries amp(vars, weights, N);
        amp.add_term({0, static_cast<int>(beta.size())}, 1);
        st.emplace(beta, std::move(amp));
    }
    std::vector<int> var_of_stage(static_cast<std::size_t>(w.length()), 0);
    auto res = detail::sweep_multi(relations_for_word(w), std::move(st), var_of_stage, N);
    auto it = res.find(Partition{});
    return it == res.end() ? MultiSeries(vars, weights, N) : it->second;
}

inline UniSeries mixed_fn(const SignWord& w, int N) {
    return mixed_fn_marked(w, N).specialize({1, 0});
}

/// Doubly free partition function in (q, u, v): u and v mark the left and
/// right boundary sizes, q grades the total flip distance
/// sum_{m=0}^{2l} |lambda^(m)|.
inline MultiSeries free_fn(const SignWord& w, int N) {
    std::vector<std::string> vars{"q", "u", "v"};
    std::vector<int> weights{1, 0, 0};
    StateVector<MultiSeries> st;
    for (const auto& beta : partitions_up_to(N)) {
        MultiSeries amp(vars, weights, N);
        amp.add_term({0, 0, static_cast<int>(beta.size())}, 1);
        st.emplace(beta, std::move(amp));
    }
    std::vector<int> var_of_stage(static_cast<std::size_t>(w.length()), 0);
    auto res = detail::sweep_multi(relations_for_word(w), std::move(st), var_of_stage, N);
    MultiSeries out(vars, weights, N);
    for (const auto& [alpha, amp] : res) {
        int a = static_cast<int>(alpha.size());
        out += amp.shifted({a, a, 0});
    }
    return out;
}

inline UniSeries free_fn_q(const SignWord& w, int N) {
    return free_fn(w, N).specialize({1, 0, 0});
}

/// Cylindric trace: sum over lambda of q^{sum_i |lambda^(i)|} over
/// sequences with lambda^(0) = lambda^(2l) = lambda.
inline UniSeries cylindric_fn(const SignWord& w, int N) {
    auto rels = relations_for_word(w);
    UniSeries total(N);
    for (const auto& lam : partitions_up_to(N)) {
        StateVector<UniSeries> st;
        st.emplace(lam, UniSeries::one(N));
        auto res = detail::sweep_q(rels, std::move(st), N);
        auto it = res.find(lam);
        if (it != res.end()) total += it->second;
    }
    return total;
}

/// Multivariate cylindric trace: exponent of x_i = |lambda^(i)| for
/// i = 1..2l (the i = 2l diagonal carries the paired boundary flips).
inline MultiSeries cylindric_fn_multi(const SignWord& w, int N) {
    auto vars = detail::stage_vars("x", w.length());
    auto rels = relations_for_word(w);
    MultiSeries total(vars, N);
    std::vector<int> var_of_stage(static_cast<std::size_t>(w.length()));
    for (int i = 1; i <= w.length(); ++i) var_of_stage[static_cast<std::size_t>(i - 1)] = i - 1;
    for (const auto& lam : partitions_up_to(N)) {
        StateVector<MultiSeries> st;
        st.emplace(lam, MultiSeries::one(vars, N));
        auto res = detail::sweep_multi(rels, std::move(st), var_of_stage, N);
        auto it = res.find(lam);
        if (it != res.end()) total += it->second;
    }
    return total;
}

/// Pure generating function for an arbitrary interlacing pattern (the
/// extended model): q grades the total partition size.
inline UniSeries interlaced_pure_fn(const std::vector<StripRelation>& rels, int N) {
    StateVector<UniSeries> st;
    st.emplace(Partition{}, UniSeries::one(N));
    auto res = detail::sweep_q(rels, std::move(st), N);
    auto it = res.find(Partition{});
    return it == res.end() ? UniSeries(N) : it->second;
}

/// Multivariate version: exponent of x_j = |lambda^(j)|, j = 1..k-1.
inline MultiSeries interlaced_pure_fn_multi(const std::vector<StripRelation>& rels, int N) {
    int k = static_cast<int>(rels.size());
    auto vars = detail::stage_vars("x", k - 1);
    StateVector<MultiSeries> st;
    st.emplace(Partition{}, MultiSeries::one(vars, N));
    std::vector<int> var_of_stage(static_cast<std::size_t>(k), -1);
    for (int i = 1; i <= k - 1; ++i) var_of_stage[static_cast<std::size_t>(i - 1)] = i - 1;
    auto res = detail::sweep_multi(rels, std::move(st), var_of_stage, N);
    auto it = res.find(Partition{});
    return it == res.end() ? MultiSeries(vars, N) : it->second;
}

/// The all-plus prescribed function with parity markers: stage arguments
/// a q^{2l+1-i} on odd stages and b q^{2l+1-i} on even ones, the finite-
/// alphabet super-Schur specialization.
inline MultiSeries prescribed_super_fn(int ell, const Partition& lambda, int N) {
    std::vector<std::string> vars{"q", "a", "b"};
    std::vector<int> weights{1, 0, 0};
    long long max_size = lambda.size() + N;
    StateVector<MultiSeries> st;
    MultiSeries seed = MultiSeries::one(vars, weights, N + 2);
    st.emplace(lambda, seed);
    for (int i = 2 * ell; i >= 1; --i) {
        bool odd = i % 2 == 1;
        OperatorSpec op;
        op.sign = Sign::plus;
        op.primed = !odd;
        op.arg = {2 * ell + 1 - i, odd ? 1 : 0, odd ? 0 : 1};
        st = apply(op, st, max_size);
    }
    auto it = st.find(Partition{});
    MultiSeries raw = it == st.end() ? MultiSeries(vars, weights, N + 2) : it->second;
    MultiSeries out(vars, weights, N);
    for (const auto& [e, c] : raw.terms())
        if (e[0] <= N) out.add_term(e, c);
    return out;
}

struct CheckReport {
    bool pass = true;
    std::string detail;
};

namespace detail {

inline bool states_equal(const StateVector<MultiSeries>& a, const StateVector<MultiSeries>& b,
                         std::string* first_diff) {
    auto ita = a.begin();
    auto itb = b.begin();
    while (ita != a.end() || itb != b.end()) {
        if (ita == a.end() || itb == b.end() || ita->first != itb->first ||
            !(ita->second == itb->second)) {
            if (first_diff) {
                const Partition& p = ita != a.end() ? ita->first
                                     : itb != b.end() ? itb->first
                                                      : Partition{};
                *first_diff = "amplitudes differ at " + p.to_string();
            }
            return false;
        }
        ++ita;
        ++itb;
    }
    return true;
}

inline StateVector<MultiSeries> scale_state(const StateVector<MultiSeries>& st,
                                            const MultiSeries& f) {
    StateVector<MultiSeries> out;
    for (const auto& [lam, amp] : st) {
        MultiSeries t = amp * f;
        if (!t.terms().empty()) out.emplace(lam, std::move(t));
    }
    return out;
}

}  // namespace detail

/// Verify Gamma^a_+(t) Gamma^b_-(u) = (1 + eps t u)^eps Gamma^b_-(u)
/// Gamma^a_+(t) on every |lambda| <= max_size, formal (t,u) to degree N;
/// eps = -1 when the primes agree, +1 otherwise.
inline CheckReport check_commutation(bool primed_plus, bool primed_minus, int N,
                                     long long max_size) {
    std::vector<std::string> vars{"t", "u"};
    OperatorSpec plus_op{Sign::plus, primed_plus, {1, 0}, 1};
    OperatorSpec minus_op{Sign::minus, primed_minus, {0, 1}, 1};
    int eps = (primed_plus == primed_minus) ? -1 : 1;
    MultiSeries factor = eps > 0 ? [&] {
        MultiSeries f = MultiSeries::one(vars, N);
        f.add_term({1, 1}, 1);
        return f;
    }()
                                 : MultiSeries::geometric(vars, {1, 1}, N, {1, 1});
    long long wide = max_size + N;
    for (const auto& lam : partitions_up_to(max_size)) {
        StateVector<MultiSeries> base;
        base.emplace(lam, MultiSeries::one(vars, N));
        auto lhs = apply(plus_op, apply(minus_op, base, wide), wide);
        auto rhs = detail::scale_state(apply(minus_op, apply(plus_op, base, wide), wide), factor);
        std::string diff;
        if (!detail::states_equal(lhs, rhs, &diff))
            return {false, "commutation failed on |" + lam.to_string() + ">: " + diff};
    }
    return {true, ""};
}

/// Same-sign operators commute on the nose.
inline CheckReport check_commutation_trivial(int N, long long max_size) {
    std::vector<std::string> vars{"t", "u"};
    long long wide = max_size + N;
    for (Sign s : {Sign::plus, Sign::minus}) {
        OperatorSpec a{s, false, {1, 0}, 1};
        OperatorSpec b{s, true, {0, 1}, 1};
        for (const auto& lam : partitions_up_to(max_size)) {
            StateVector<MultiSeries> base;
            base.emplace(lam, MultiSeries::one(vars, N));
            auto lhs = apply(a, apply(b, base, wide), wide);
            auto rhs = apply(b, apply(a, base, wide), wide);
            std::string diff;
            if (!detail::states_equal(lhs, rhs, &diff))
                return {false, std::string("trivial commutation failed for sign ") +
                                   static_cast<char>(s) + " on |" + lam.to_string() + ">: " + diff};
        }
    }
    return {true, ""};
}

namespace detail {

/// Free boundary ket sum_lambda v^{|lambda|} |lambda>, sizes <= N.
inline StateVector<MultiSeries> boundary_state(const std::vector<std::string>& vars, int v_index,
                                               int N, bool even_only) {
    StateVector<MultiSeries> st;
    for (const auto& lam : partitions_up_to(N)) {
        if (even_only) {
            bool even = true;
            for (int p : lam.parts)
                if (p % 2 != 0) even = false;
            if (!even) continue;
        }
        MultiSeries amp(vars, N);
        Exponents e(vars.size(), 0);
        e[static_cast<std::size_t>(v_index)] = static_cast<int>(lam.size());
        amp.add_term(e, 1);
        st.emplace(lam, std::move(amp));
    }
    return st;
}

}  // namespace detail

/// Verify the reflection relations on the free boundary states, their bra
/// duals, and the even-state variants, all to formal degree N.
inline CheckReport check_reflection(int N) {
    std::vector<std::string> vars{"t", "v"};
    long long wide = 2 * N + 2;
    auto v_state = detail::boundary_state(vars, 1, N, false);
    auto even_state = detail::boundary_state(vars, 1, N, true);
    MultiSeries geom_tv = MultiSeries::geometric(vars, {1, 1}, N, {1, 1});
    MultiSeries geom_t2v2 = MultiSeries::geometric(vars, {1, 1}, N, {2, 2});

    struct Line {
        std::string name;
        bool primed;
        bool bra;
        bool even;
    };
    for (const Line& line : {Line{"Gamma_+ on |v>", false, false, false},
                             Line{"Gamma'_+ on |v>", true, false, false},
                             Line{"<u| Gamma_-", false, true, false},
                             Line{"<u| Gamma'_-", true, true, false},
                             Line{"Gamma_+ on even state", false, false, true},
                             Line{"Gamma'_+ on even state", true, false, true}}) {
        const auto& state = line.even ? even_state : v_state;
        OperatorSpec lhs_op{line.bra ? Sign::minus : Sign::plus, line.primed, {1, 0}, 1};
        OperatorSpec rhs_op{line.bra ? Sign::plus : Sign::minus, line.primed, {1, 2}, 1};
        auto lhs = line.bra ? apply_to_bra(lhs_op, state, wide) : apply(lhs_op, state, wide);
        auto rhs0 = line.bra ? apply_to_bra(rhs_op, state, wide) : apply(rhs_op, state, wide);
        StateVector<MultiSeries> rhs;
        if (line.even && line.primed)
            rhs = rhs0;  // Gamma'_+(t)|even> = Gamma'_-(t v^2)|even>, no factor
        else if (line.even)
            rhs = detail::scale_state(rhs0, geom_t2v2);
        else
            rhs = detail::scale_state(rhs0, geom_tv);
        std::string diff;
        if (!detail::states_equal(lhs, rhs, &diff))
            return {false, "reflection line '" + line.name + "' failed: " + diff};
    }

    // even state = Gamma_-(-v) |v>, coefficient of v capped at N
    OperatorSpec gm{Sign::minus, false, {0, 1}, -1};
    auto built = apply(gm, v_state, N);  // sizes beyond N exceed the v-degree bound
    std::string diff;
    if (!detail::states_equal(built, even_state, &diff))
        return {false, "even boundary state does not match Gamma_-(-v)|v>: " + diff};
    return {true, ""};
}

}  // namespace oblique
