#include "doctest.h"

#include "spf/characters.hpp"
#include "spf/errors.hpp"
#include "spf/lr.hpp"

using namespace spf;

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(Partition{1, 1, 1}) == 6);
    CHECK(centralizer_order(Partition{3}) == 3);
    CHECK(centralizer_order(Partition{2, 1}) == 2);
    CHECK(centralizer_order(Partition{2, 2, 1}) == 8);
    CHECK(centralizer_order(Partition{}) == 1);
    for (int d = 0; d <= 8; ++d) {
        Count total = 0;
        for (const auto& rho : enumerate_partitions(d)) total += class_size(rho);
        CHECK(total == factorial(d));
    }
}

TEST_CASE("character values") {
    for (const auto& rho : enumerate_partitions(5)) CHECK(mn_character(Partition{5}, rho) == 1);
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_character(Partition{}, Partition{}) == 1);
    // The sign character.
    CHECK(mn_character(Partition{1, 1, 1, 1}, Partition{2, 1, 1}) == -1);
    CHECK(mn_character(Partition{1, 1, 1, 1}, Partition{3, 1}) == 1);
    CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), InputError);
}

TEST_CASE("row and column orthogonality") {
    for (int d = 0; d <= 8; ++d) {
        auto shapes = enumerate_partitions(d);
        for (const auto& la : shapes)
            for (const auto& mu : shapes)
                CHECK(inner_product(irreducible_character(la), irreducible_character(mu)) == (la == mu ? 1 : 0));
        for (const auto& r1 : shapes) {
            for (const auto& r2 : shapes) {
                Count s = 0;
                for (const auto& la : shapes) s += mn_character(la, r1) * mn_character(la, r2);
                CHECK(s == (r1 == r2 ? centralizer_order(r1) : 0));
            }
        }
    }
}

TEST_CASE("hook-length dimension") {
    CHECK(dimension(Partition{4}) == 1);
    CHECK(dimension(Partition{2, 1}) == 2);
    CHECK(dimension(Partition{2, 2}) == 2);
    CHECK(dimension(Partition{}) == 1);
    for (int d = 0; d <= 8; ++d) {
        std::vector<int> ones(static_cast<std::size_t>(d), 1);
        Count sum_sq = 0;
        for (const auto& la : enumerate_partitions(d)) {
            CHECK(dimension(la) == mn_character(la, Partition(ones)));
            sum_sq += dimension(la) * dimension(la);
        }
        CHECK(sum_sq == factorial(d));
    }
}

TEST_CASE("kronecker oracle") {
    CHECK(kronecker_oracle(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);
    for (int d = 1; d <= 6; ++d) {
        auto shapes = enumerate_partitions(d);
        std::vector<int> ones(static_cast<std::size_t>(d), 1);
        const Partition trivial{d};
        const Partition sign(ones);
        for (const auto& mu : shapes) {
            for (const auto& al : shapes) {
                CHECK(kronecker_oracle(trivial, mu, al) == (mu == al ? 1 : 0));
                CHECK(kronecker_oracle(sign, mu, al) == (conjugate(mu) == al ? 1 : 0));
            }
        }
    }
    CHECK_THROWS_AS(kronecker_oracle(Partition{2}, Partition{1}, Partition{1}), InputError);
}

TEST_CASE("kronecker oracle symmetries") {
    for (int d = 1; d <= 6; ++d) {
        auto shapes = enumerate_partitions(d);
        for (const auto& a : shapes) {
            for (const auto& b : shapes) {
                for (const auto& c : shapes) {
                    const Count g = kronecker_oracle(a, b, c);
                    CHECK(g == kronecker_oracle(a, c, b));
                    CHECK(g == kronecker_oracle(b, a, c));
                    CHECK(g == kronecker_oracle(b, c, a));
                    CHECK(g == kronecker_oracle(c, a, b));
                    CHECK(g == kronecker_oracle(c, b, a));
                    CHECK(g == kronecker_oracle(conjugate(a), conjugate(b), c));
                    CHECK(g == kronecker_oracle(a, conjugate(b), conjugate(c)));
                    CHECK(g == kronecker_oracle(conjugate(a), b, conjugate(c)));
                }
            }
        }
    }
}

TEST_CASE("permutation characters") {
    auto trivial = perm_character(Composition{4});
    for (const auto& [rho, v] : trivial.values()) CHECK(v == 1);

    auto regular = perm_character(Composition{1, 1, 1});
    CHECK(regular.at(Partition{1, 1, 1}) == 6);
    CHECK(regular.at(Partition{2, 1}) == 0);
    CHECK(regular.at(Partition{3}) == 0);

    auto m21 = perm_character(Composition{2, 1});
    CHECK(m21.at(Partition{1, 1, 1}) == 3);
    CHECK(m21.at(Partition{2, 1}) == 1);
    CHECK(m21.at(Partition{3}) == 0);

    auto m22 = perm_character(Composition{2, 2});
    CHECK(m22.at(Partition{2, 2}) == 2);
    CHECK(m22.at(Partition{2, 1, 1}) == 2);
    CHECK(m22.at(Partition{1, 1, 1, 1}) == 6);

    CHECK(perm_character(Composition{2, 0, 1}) == perm_character(Composition{1, 2}));
}

TEST_CASE("permutation character matches Kostka expansion") {
    for (int d = 0; d <= 6; ++d) {
        for (const auto& nu : enumerate_partitions(d)) {
            // Also try a permuted weight with an inserted zero.
            std::vector<int> shuffled(nu.parts().rbegin(), nu.parts().rend());
            shuffled.insert(shuffled.begin(), 0);
            for (const Composition& w : {Composition(nu), Composition(shuffled)}) {
                ClassFunction expected(d);
                for (const auto& la : enumerate_partitions(d)) {
                    ClassFunction term(d);
                    for (const auto& [rho, v] : term.values()) term.set(rho, kostka(la, w) * mn_character(la, rho));
                    expected = expected + term;
                }
                CHECK(perm_character(w) == expected);
            }
        }
    }
}

TEST_CASE("lr oracle") {
    CHECK(lr_oracle(Partition{2, 1}, Partition{2, 1}, Partition{}) == 1);
    CHECK(lr_oracle(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_oracle(Partition{2, 1}, Partition{2}, Partition{1}) == 1);
    CHECK(lr_oracle(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK_THROWS_AS(lr_oracle(Partition{2, 1}, Partition{2}, Partition{2}), InputError);
}

TEST_CASE("internal product with permutation modules") {
    CHECK(internal_h_oracle(Partition{2, 1}, Composition{3}) == SchurExpansion::basis(Partition{2, 1}));
    const auto regular3 = SchurExpansion::basis(Partition{3}) + SchurExpansion::basis(Partition{2, 1}, 2) +
                          SchurExpansion::basis(Partition{1, 1, 1});
    CHECK(internal_h_oracle(Partition{2, 1}, Composition{2, 1}) == regular3);
    CHECK(internal_h_oracle(Partition{3}, Composition{1, 1, 1}) == regular3);
}

TEST_CASE("character cache snapshot") {
    character_cache_clear();
    mn_character(Partition{2, 1}, Partition{3});
    auto snap = character_cache_snapshot();
    CHECK(snap.at("2,1|3") == -1);
    character_cache_clear();
    character_cache_load(snap);
    CHECK(character_cache_snapshot() == snap);
}
