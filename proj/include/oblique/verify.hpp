#pragma once

// Aggregated verification suites behind the CLI `verify` subcommand.
// Each suite runs a family of identities or consistency checks at caller-
// chosen desk-scale bounds and reports one named result per check.

#include "closed_forms.hpp"
#include "extended.hpp"
#include "vertex.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oblique {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;

    bool pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

namespace detail {

inline std::vector<SignWord> words_up_to(int max_len) {
    std::vector<SignWord> out;
    for (int len = 2; len <= max_len; len += 2)
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<Sign> s;
            for (int i = 0; i < len; ++i)
                s.push_back((mask >> i) & 1 ? Sign::plus : Sign::minus);
            out.emplace_back(std::move(s));
        }
    return out;
}

inline std::vector<DiamondWord> diamonds_of(int len) {
    using R = StripRelation;
    std::vector<DiamondWord> out;
    DiamondWord cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (R r : {R::HPlus, R::HMinus, R::VPlus, R::VMinus}) {
            cur.push_back(r);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

inline void add(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.results.push_back({name, pass, detail});
}

}  // namespace detail

inline SuiteReport verify_commutation(int trunc, long long max_size) {
    SuiteReport rep{"commutation", {}};
    const char* names[2] = {"Gamma", "Gamma'"};
    for (bool pp : {false, true})
        for (bool pm : {false, true}) {
            CheckReport r = check_commutation(pp, pm, trunc, max_size);
            detail::add(rep, std::string(names[pp]) + "_+ with " + names[pm] + "_-", r.pass, r.detail);
        }
    CheckReport triv = check_commutation_trivial(trunc, max_size);
    detail::add(rep, "same-sign operators commute", triv.pass, triv.detail);
    return rep;
}

inline SuiteReport verify_reflection(int trunc) {
    SuiteReport rep{"reflection", {}};
    CheckReport r = check_reflection(trunc);
    detail::add(rep, "reflection relations and even-state variants", r.pass, r.detail);
    return rep;
}

inline SuiteReport verify_formulas(int max_len, int trunc) {
    SuiteReport rep{"formulas", {}};
    auto words = detail::words_up_to(max_len);

    bool pure_ok = true, hook_ok = true, strip_ok = true;
    std::string pure_bad, hook_bad, strip_bad;
    for (const auto& w : words) {
        if (!(pure_q(w, trunc) == pure_fn(w, trunc))) {
            pure_ok = false;
            pure_bad = w.to_string();
        }
        if (!(hook_q(w.signs, trunc) == pure_q(w, trunc))) {
            hook_ok = false;
            hook_bad = w.to_string();
        }
        std::vector<Sign> stripped = w.signs;
        while (!stripped.empty() && stripped.front() == Sign::minus) stripped.erase(stripped.begin());
        while (!stripped.empty() && stripped.back() == Sign::plus) stripped.pop_back();
        if (!(pure_product_q(stripped, trunc) == pure_q(w, trunc))) {
            strip_ok = false;
            strip_bad = w.to_string();
        }
    }
    detail::add(rep, "pure product vs operator oracle", pure_ok,
                pure_ok ? "" : "first failure at " + pure_bad);
    detail::add(rep, "hook form vs pair product", hook_ok, hook_ok ? "" : "first failure at " + hook_bad);
    detail::add(rep, "stripping invariance", strip_ok, strip_ok ? "" : "first failure at " + strip_bad);

    int multi_trunc = std::min(trunc, 6);
    bool multi_ok = true;
    std::string multi_bad;
    for (const auto& w : words) {
        if (w.length() > 4) continue;
        if (!(pure_multi(w, multi_trunc) == pure_fn_multi(w, multi_trunc))) {
            multi_ok = false;
            multi_bad = w.to_string();
        }
    }
    detail::add(rep, "multivariate pure vs oracle", multi_ok,
                multi_ok ? "" : "first failure at " + multi_bad);

    bool aztec_ok = true;
    for (int ell = 1; ell <= 5; ++ell) {
        UniSeries p = aztec_poly(ell);
        if (!(p == pure_q(SignWord::repeat("+-", ell), p.trunc()))) aztec_ok = false;
        if (p.value_at_one() != (Int(1) << (ell * (ell + 1) / 2))) aztec_ok = false;
    }
    detail::add(rep, "aztec polynomial and 2^{l(l+1)/2}", aztec_ok);

    bool pyr_ok = true;
    for (int ell = 1; ell <= trunc; ++ell) {
        SignWord w = SignWord::parse(std::string(ell, '+') + std::string(ell, '-'));
        if (!(pyramid_q(ell, trunc) == pure_q(w, trunc))) pyr_ok = false;
    }
    for (int ell = trunc; ell <= trunc + 2; ++ell)
        if (!(pyramid_q(ell, trunc) == pyramid_limit(trunc))) pyr_ok = false;
    detail::add(rep, "pyramid products and stabilization", pyr_ok);

    bool mixed_ok = true, free_ok = true, cyl_ok = true;
    std::string mixed_bad, free_bad, cyl_bad;
    int bc_trunc = std::min(trunc, 8);
    for (const auto& w : words) {
        if (w.length() > 4) continue;
        if (!(mixed_q(w, bc_trunc) == mixed_fn(w, bc_trunc))) {
            mixed_ok = false;
            mixed_bad = w.to_string();
        }
        if (!(free_q(w, bc_trunc) == free_fn_q(w, bc_trunc))) {
            free_ok = false;
            free_bad = w.to_string();
        }
        if (w.has_plus() && w.has_minus() && !(cyl_q(w, bc_trunc) == cylindric_fn(w, bc_trunc))) {
            cyl_ok = false;
            cyl_bad = w.to_string();
        }
    }
    detail::add(rep, "mixed product vs oracle", mixed_ok, mixed_ok ? "" : "first failure at " + mixed_bad);
    detail::add(rep, "free product vs oracle", free_ok, free_ok ? "" : "first failure at " + free_bad);
    detail::add(rep, "cylindric product vs oracle", cyl_ok, cyl_ok ? "" : "first failure at " + cyl_bad);
    return rep;
}

inline SuiteReport verify_flips(int max_len, long long max_size) {
    SuiteReport rep{"flips", {}};
    bool bfs_ok = true, height_ok = true, step_ok = true;
    std::string bad;
    for (const auto& w : detail::words_up_to(max_len)) {
        auto dist = bfs_flip_distances(w, max_size);
        auto pures = enumerate_pure_sequences(w, max_size);
        if (dist.size() != pures.size()) {
            bfs_ok = false;
            bad = w.to_string();
        }
        for (const auto& s : pures) {
            auto it = dist.find(s.lambdas);
            if (it == dist.end() || it->second != s.total_size()) {
                bfs_ok = false;
                bad = w.to_string();
            }
            if (height_distance(s, sufficient_half_width(s)) != s.total_size()) {
                height_ok = false;
                bad = w.to_string();
            }
            for (int m = 1; m < w.length(); ++m)
                for (int row = 1; row <= s.lambda(m).rows() + 1; ++row) {
                    auto up = flip_seq(s, m, row, FlipDir::up);
                    if (up.ok && up.seq.total_size() != s.total_size() + 1) step_ok = false;
                }
        }
    }
    detail::add(rep, "BFS distance = total partition size", bfs_ok, bfs_ok ? "" : "first failure at " + bad);
    detail::add(rep, "height-sum distance agrees", height_ok, height_ok ? "" : "first failure at " + bad);
    detail::add(rep, "ascendent flips raise the size by one", step_ok);
    return rep;
}

inline SuiteReport verify_bijection(int count, unsigned seed) {
    SuiteReport rep{"bijection", {}};
    std::mt19937 rng(seed);
    auto words = detail::words_up_to(6);

    bool tiling_ok = true;
    std::string bad;
    for (int it = 0; it < count && tiling_ok; ++it) {
        const SignWord& w = words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)];
        auto rels = relations_for_word(w);
        std::vector<Partition> ls;
        auto pool = partitions_up_to(4);
        ls.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        for (auto r : rels) {
            auto opts = forward_extensions(ls.back(), r, ls.back().size() + 3);
            ls.push_back(opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)]);
        }
        InterlacedSeq s(w, ls);
        TilingWindow t = seq_to_tiling(s, sufficient_half_width(s));
        if (!(tiling_to_seq(t) == s) || !(asymptotic_data(t) == w)) {
            tiling_ok = false;
            bad = w.to_string();
        }
    }
    detail::add(rep, "sequence <-> tiling round trips", tiling_ok,
                tiling_ok ? "" : "failed for word " + bad);

    // figure fixture: word (+++++---++)
    {
        SignWord w = SignWord::parse("+++++---++");
        std::vector<Partition> ls;
        for (int i = 0; i <= 5; ++i) ls.push_back(Partition{1, 1});
        for (int i = 6; i <= 8; ++i) ls.push_back(Partition{});
        ls.push_back(Partition{1});
        ls.push_back(Partition{2, 1});
        InterlacedSeq s(w, ls);
        bool ok = tiling_to_seq(seq_to_tiling(s, sufficient_half_width(s))) == s &&
                  flip_distance(s) == 16;
        detail::add(rep, "text example fixture (flip distance 16)", ok);
    }

    bool match_ok = true;
    for (int it = 0; it < count && match_ok; ++it) {
        auto ds = detail::diamonds_of(1 + static_cast<int>(rng() % 5));
        const DiamondWord& d = ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)];
        std::vector<Partition> ls;
        auto pool = partitions_up_to(3);
        ls.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        for (auto r : d) {
            auto opts = forward_extensions(ls.back(), r, ls.back().size() + 3);
            ls.push_back(opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)]);
        }
        ExtendedSeq s(d, ls);
        if (!(psi(psi_inverse(s)) == s)) match_ok = false;
    }
    detail::add(rep, "sequence <-> matching round trips", match_ok);

    // figure fixture: diamond h+,h+,v+,v-,v-,h-
    {
        ExtendedSeq s(parse_diamond("h+,h+,v+,v-,v-,h-"),
                      {Partition{}, Partition{2}, Partition{2}, Partition{3, 1}, Partition{2, 1},
                       Partition{1}, Partition{}});
        detail::add(rep, "matching figure fixture", psi(psi_inverse(s)) == s);
    }
    return rep;
}

inline SuiteReport verify_extended(int max_len, int trunc) {
    SuiteReport rep{"extended", {}};
    bool gf_ok = true;
    std::string bad;
    for (int len = 1; len <= max_len; ++len)
        for (const auto& d : detail::diamonds_of(len)) {
            UniSeries expect(trunc);
            for (auto& ls : enumerate_sequences(d, Partition{}, Partition{}, trunc)) {
                long long total = 0;
                for (const auto& l : ls) total += l.size();
                expect.at(static_cast<int>(total)) += 1;
            }
            if (!(extended_q(d, trunc) == expect)) {
                gf_ok = false;
                bad = diamond_to_string(d);
            }
        }
    detail::add(rep, "extended product vs enumeration", gf_ok, gf_ok ? "" : "first failure at " + bad);

    bool flip_ok = true;
    for (const auto& d : detail::diamonds_of(3)) {
        for (auto& ls : enumerate_sequences(d, Partition{}, Partition{}, 3)) {
            ExtendedSeq s(d, std::move(ls));
            MatchingWindow m = psi_inverse(s, -14, 14);
            for (const Face& f : flippable_faces(m)) {
                auto res = flip_matching(m, f);
                if (!res.ok) {
                    flip_ok = false;
                    continue;
                }
                ExtendedSeq nxt = psi(res.matching);
                long long delta = nxt.total_size() - s.total_size();
                if (delta != (res.ascendent ? 1 : -1)) flip_ok = false;
            }
        }
    }
    detail::add(rep, "matching flips move one particle", flip_ok);

    bool contract_ok = true;
    for (const auto& w : detail::words_up_to(std::min(max_len, 6))) {
        DiamondWord d = relations_for_word(w);
        if (!(contract_to_steep(d) == w) || !(extended_q(d, trunc) == pure_q(w, trunc)))
            contract_ok = false;
    }
    detail::add(rep, "contraction agrees with steep products", contract_ok);
    return rep;
}

}  // namespace oblique
