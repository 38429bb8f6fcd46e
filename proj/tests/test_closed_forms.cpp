#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <oblique/closed_forms.hpp>
#include <oblique/vertex.hpp>

using namespace oblique;

namespace {

UniSeries from_coeffs(std::vector<long> cs) {
    UniSeries s(static_cast<int>(cs.size()) - 1);
    for (std::size_t i = 0; i < cs.size(); ++i) s.at(static_cast<int>(i)) = cs[i];
    return s;
}

std::vector<SignWord> all_words(int length) {
    std::vector<SignWord> out;
    for (int mask = 0; mask < (1 << length); ++mask) {
        std::vector<Sign> s;
        for (int i = 0; i < length; ++i)
            s.push_back((mask >> i) & 1 ? Sign::plus : Sign::minus);
        out.emplace_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<StripRelation>> all_diamonds(int length) {
    using R = StripRelation;
    std::vector<std::vector<StripRelation>> out;
    std::vector<R> alphabet{R::HPlus, R::HMinus, R::VPlus, R::VMinus};
    std::vector<R> cur;
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (R r : alphabet) {
            cur.push_back(r);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace

TEST_CASE("pure product fixtures") {
    CHECK(pure_q(SignWord::parse("+-"), 4) == from_coeffs({1, 1, 0, 0, 0}));
    CHECK(pure_q(SignWord::parse("++--"), 4) == from_coeffs({1, 1, 2, 3, 4}));
    CHECK(pure_q(SignWord::parse("----"), 6) == UniSeries::one(6));
    CHECK(pure_q(SignWord::parse("++++"), 6) == UniSeries::one(6));
}

TEST_CASE("pure formula equals the operator oracle") {
    for (int len : {2, 4})
        for (const auto& w : all_words(len)) CHECK(pure_q(w, 8) == pure_fn(w, 8));
}

TEST_CASE("multivariate pure formula equals the oracle") {
    for (int len : {2, 4})
        for (const auto& w : all_words(len)) CHECK(pure_multi(w, 5) == pure_fn_multi(w, 5));
}

TEST_CASE("hook diagram shapes") {
    CHECK(hook_diagram(SignWord::parse("+-").signs) == Partition{1});
    CHECK(hook_diagram(SignWord::parse("+-+-").signs) == Partition{2, 1});
    CHECK(hook_diagram(SignWord::parse("++--").signs) == Partition{2, 2});
    CHECK(hook_diagram(SignWord::parse("--++").signs) == Partition{});

    // the staircase is the only shape with all hooks odd
    for (int ell = 1; ell <= 4; ++ell) {
        Partition stair = hook_diagram(SignWord::repeat("+-", ell).signs);
        std::vector<int> expect;
        for (int i = ell; i >= 1; --i) expect.push_back(i);
        CHECK(stair == Partition(expect));
        for (const auto& cell : hook_cells(stair)) CHECK(cell.hook % 2 == 1);
    }
}

TEST_CASE("hook form equals the pair product") {
    for (int len : {2, 4, 6})
        for (const auto& w : all_words(len)) CHECK(hook_q(w.signs, 10) == pure_q(w, 10));
}

TEST_CASE("stripping leading minuses and trailing pluses is invisible") {
    for (const auto& w : all_words(6)) {
        std::vector<Sign> stripped = w.signs;
        while (!stripped.empty() && stripped.front() == Sign::minus)
            stripped.erase(stripped.begin());
        while (!stripped.empty() && stripped.back() == Sign::plus) stripped.pop_back();
        CHECK(pure_product_q(stripped, 9) == pure_q(w, 9));
    }
}

TEST_CASE("aztec polynomial") {
    CHECK(aztec_poly(1) == from_coeffs({1, 1}));
    CHECK(aztec_poly(2) == from_coeffs({1, 2, 1, 1, 2, 1}));
    for (int ell = 1; ell <= 6; ++ell) {
        Int expect = Int(1) << (ell * (ell + 1) / 2);
        CHECK(aztec_poly(ell).value_at_one() == expect);
    }
    for (int ell = 1; ell <= 4; ++ell) {
        UniSeries p = aztec_poly(ell);
        CHECK(p == pure_q(SignWord::repeat("+-", ell), p.trunc()));
        // computed past its degree, the series is visibly a polynomial
        CHECK(pure_q(SignWord::repeat("+-", ell), p.trunc() + 6).looks_polynomial(6));
    }
}

TEST_CASE("stanley weights match the multivariate aztec product") {
    for (int ell = 1; ell <= 3; ++ell) {
        SignWord w = SignWord::repeat("+-", ell);
        int degree = 0;
        for (int i = 1; i <= 2 * ell; i += 2)
            for (int j = i + 1; j <= 2 * ell; j += 2) degree += j - i;
        MultiSeries poly = pure_multi(w, degree);
        CHECK(stanley_from_pure(ell, poly) == stanley_multi(ell));
    }
}

TEST_CASE("pyramid products") {
    CHECK(pyramid_q(1, 4) == from_coeffs({1, 1, 0, 0, 0}));
    CHECK(pyramid_q(2, 4) == from_coeffs({1, 1, 2, 3, 4}));
    CHECK(pyramid_limit(4) == from_coeffs({1, 1, 2, 5, 10}));

    // finite-l product is the pure product of +^l -^l
    for (int ell = 1; ell <= 6; ++ell) {
        SignWord w = SignWord::parse(std::string(ell, '+') + std::string(ell, '-'));
        CHECK(pyramid_q(ell, 8) == pure_q(w, 8));
    }
    // stabilization once l reaches the truncation order
    for (int ell = 6; ell <= 9; ++ell) CHECK(pyramid_q(ell, 6) == pyramid_limit(6));
}

TEST_CASE("mixed product formula") {
    // (1+q) * 1/(1-q^2), the literal l = 1 instantiation
    CHECK(mixed_q(SignWord::parse("+-"), 6) == from_coeffs({1, 1, 1, 1, 1, 1, 1}));
    for (int len : {2, 4})
        for (const auto& w : all_words(len)) {
            CHECK(mixed_q(w, 6) == mixed_fn(w, 6));
            CHECK(mixed_multi_marked(w, 6) == mixed_fn_marked(w, 6));
        }
}

TEST_CASE("free product formula") {
    for (int len : {2, 4})
        for (const auto& w : all_words(len)) {
            CHECK(free_q(w, 7) == free_fn_q(w, 7));
            CHECK(free_multi_marked(w, 6) == free_fn(w, 6));
        }
}

TEST_CASE("free over mixed has nonnegative coefficients") {
    for (const auto& w : all_words(4)) {
        UniSeries ratio = free_q(w, 6) * mixed_q(w, 6).inverse();
        for (const auto& c : ratio.coeffs()) CHECK(c >= 0);
    }
}

TEST_CASE("super Littlewood product") {
    // w = +^{2l}: equals the marked mixed oracle
    for (int ell : {1, 2}) {
        SignWord w = SignWord::repeat("+", 2 * ell);
        int N = 7;
        std::vector<std::optional<Exponents>> y;
        for (int i = 1; i <= 2 * ell; ++i)
            y.push_back(Exponents{boundary_exponent(w, i), 0});
        MultiSeries lhs = super_littlewood(y, {"q", "v"}, {1, 0}, 1, N);
        CHECK(lhs == mixed_fn_marked(w, N));
        CHECK(lhs == mixed_multi_marked(w, N));
    }

    // y_{2i-1} = z_i, y_{2i} = 0, v = 1 reduces to the Littlewood product
    int ell = 3, N = 5;
    std::vector<std::string> vars{"z1", "z2", "z3", "v"};
    std::vector<int> weights{1, 1, 1, 0};
    std::vector<std::optional<Exponents>> y;
    for (int i = 1; i <= 2 * ell; ++i) {
        if (i % 2 == 1) {
            Exponents e(vars.size(), 0);
            e[static_cast<std::size_t>((i - 1) / 2)] = 1;
            y.push_back(e);
        } else {
            y.push_back(std::nullopt);
        }
    }
    MultiSeries lhs = super_littlewood(y, vars, weights, 3, N);
    MultiSeries expect = MultiSeries::one(vars, weights, N);
    for (int i = 0; i < ell; ++i) {
        Exponents e(vars.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[3] = 1;
        expect *= MultiSeries::geometric(vars, weights, N, e);
    }
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) {
            Exponents e(vars.size(), 0);
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(j)] = 1;
            e[3] = 2;
            expect *= MultiSeries::geometric(vars, weights, N, e);
        }
    CHECK(lhs == expect);
}

TEST_CASE("cylindric product formula") {
    // hand enumeration: (lambda, mu) pairs with lambda h< mu v> lambda,
    // weight q^{|mu|+|lambda|}: 1, 1, 1, 2, 3
    CHECK(cyl_q(SignWord::parse("+-"), 4) == from_coeffs({1, 1, 1, 2, 3}));
    CHECK_THROWS(cyl_q(SignWord::parse("++"), 4));

    for (int len : {2, 4})
        for (const auto& w : all_words(len)) {
            if (!w.has_plus() || !w.has_minus()) continue;
            CHECK(cyl_q(w, 8) == cylindric_fn(w, 8));
            CHECK(cyl_multi(w, 5) == cylindric_fn_multi(w, 5));
            CHECK(cyl_multi(w, 6).specialize_all_to_q() == cyl_q(w, 6));
        }
}

TEST_CASE("hook-content super product") {
    CHECK(hook_content_super(Partition{}, 6) ==
          MultiSeries::one({"q", "a", "b"}, {1, 0, 0}, 6));

    // lambda = (1): (a q^2 + b q)/(1 - q^2)
    MultiSeries one_cell = hook_content_super(Partition{1}, 5);
    MultiSeries expect({"q", "a", "b"}, {1, 0, 0}, 5);
    for (int k = 0; 2 + 2 * k <= 5; ++k) expect.add_term({2 + 2 * k, 1, 0}, 1);
    for (int k = 0; 1 + 2 * k <= 5; ++k) expect.add_term({1 + 2 * k, 0, 1}, 1);
    CHECK(one_cell == expect);

    // stabilized prescribed functions match with markers on
    for (const Partition& lam :
         {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        int N = 6, ell = 6;
        CHECK(hook_content_super(lam, N) == prescribed_super_fn(ell, lam, N));
    }
}

TEST_CASE("downstream generating functions count objects: nonnegative coefficients") {
    for (const auto& w : all_words(4)) {
        std::vector<UniSeries> series{pure_q(w, 8), mixed_q(w, 8), free_q(w, 8)};
        if (w.has_plus() && w.has_minus()) series.push_back(cyl_q(w, 8));
        for (const auto& s : series)
            for (const auto& c : s.coeffs()) CHECK(c >= 0);
        MultiSeries pm = pure_multi(w, 5);
        for (const auto& [e, c] : pm.terms()) CHECK(c > 0);
    }
}

TEST_CASE("extended product fixtures") {
    using R = StripRelation;
    CHECK(extended_q({R::HPlus, R::HMinus}, 5) == from_coeffs({1, 1, 1, 1, 1, 1}));
    CHECK(extended_q({R::HPlus, R::VMinus}, 5) == from_coeffs({1, 1, 0, 0, 0, 0}));
}

TEST_CASE("extended product equals the interlaced oracle") {
    for (int len = 1; len <= 3; ++len)
        for (const auto& d : all_diamonds(len)) {
            CHECK(extended_q(d, 6) == interlaced_pure_fn(d, 6));
            if (len >= 2) CHECK(extended_multi(d, 5) == interlaced_pure_fn_multi(d, 5));
        }
}

TEST_CASE("alternating diamond words reduce to steep words") {
    for (const auto& w : all_words(4)) {
        auto rels = relations_for_word(w);
        CHECK(extended_q(rels, 8) == pure_q(w, 8));
        CHECK(extended_multi(rels, 6) == pure_multi(w, 6));
    }
}
