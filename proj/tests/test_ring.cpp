#include "doctest.h"

#include <algorithm>
#include <set>

#include "rtheta/ring.hpp"

using namespace rtheta;

namespace {

std::vector<Elem> elems(std::initializer_list<const char*> names) {
    std::vector<Elem> out;
    for (const char* s : names) out.push_back(parse_elem(s));
    std::sort(out.begin(), out.end());
    return out;
}

// independent oracle: smallest subset containing g closed under addition and
// multiplication by every ring element
std::vector<Elem> ideal_closure(const Ring& ring, Elem g) {
    std::set<int> seen{g.index()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(seen.begin(), seen.end());
        for (int i : snapshot) {
            const Elem x = Elem::from_index(i);
            for (int j : snapshot)
                if (seen.insert(add(x, Elem::from_index(j)).index()).second) grew = true;
            for (Elem r : kAllElements)
                if (seen.insert(ring.mul(r, x).index()).second) grew = true;
        }
    }
    std::vector<Elem> out;
    for (int i : seen) out.push_back(Elem::from_index(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("element parsing and printing") {
    for (Elem x : kAllElements) CHECK(parse_elem(to_string(x)) == x);
    CHECK(parse_elem("0+0w") == kZero);
    CHECK(parse_elem("2+2w") == kTwoPlusTwoW);
    CHECK(parse_elem("w") == kW);
    CHECK(parse_elem("3w") == elem(0, 3));
    CHECK(parse_elem("1+w") == elem(1, 1));
    CHECK(parse_elem(" 1 + 3w ") == elem(1, 3));
    CHECK(to_string(kZero) == "0");
    CHECK(to_string(elem(0, 2)) == "2w");
    CHECK(to_string(elem(3, 1)) == "3+w");
    CHECK_THROWS_AS(parse_elem(""), ParseError);
    CHECK_THROWS_AS(parse_elem("4"), ParseError);
    CHECK_THROWS_AS(parse_elem("1+"), ParseError);
    CHECK_THROWS_AS(parse_elem("ww"), ParseError);
    CHECK_THROWS_AS(parse_elem("1+2v"), ParseError);
}

TEST_CASE("addition facts") {
    CHECK(add(elem(1, 1), elem(3, 3)) == kZero);
    for (Elem x : kAllElements) CHECK(add(x, kZero) == x);
    CHECK(add(kTwoPlusTwoW, kTwoPlusTwoW) == kZero);
    for (Elem x : kAllElements) CHECK(add(x, neg(x)) == kZero);
}

TEST_CASE("multiplication facts") {
    CHECK(Ring::of(kTwoPlusTwoW).mul(kW, kW) == kTwoPlusTwoW);
    for (Elem theta : kAllElements)
        for (Elem x : kAllElements) CHECK(Ring::of(theta).mul(x, kZero) == kZero);
    CHECK(Ring::of(kTwo).mul(elem(1, 1), elem(1, 1)) == elem(3, 2));
    CHECK(Ring::of(elem(1, 1)).mul(elem(1, 1), elem(1, 1)) == elem(2, 3));
}

TEST_CASE("ring axioms hold exhaustively for every theta") {
    for (Elem theta : kAllElements) {
        const Ring& ring = Ring::of(theta);
        for (Elem x : kAllElements) {
            CHECK(ring.mul(x, kOne) == x);
            for (Elem y : kAllElements) {
                CHECK(ring.mul(x, y) == ring.mul(y, x));
                for (Elem z : kAllElements) {
                    CHECK(ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z)));
                    CHECK(ring.mul(x, add(y, z)) == add(ring.mul(x, y), ring.mul(x, z)));
                }
            }
        }
    }
}

TEST_CASE("classification matches the chain/non-chain split") {
    const auto chain = elems({"2", "3", "1+w", "3+w", "1+2w", "2+2w", "1+3w", "3+3w"});
    int chain_count = 0;
    for (Elem theta : kAllElements) {
        const bool expected = std::binary_search(chain.begin(), chain.end(), theta);
        CHECK(Ring::of(theta).is_chain() == expected);
        chain_count += Ring::of(theta).is_chain();
    }
    CHECK(chain_count == 8);
    CHECK(Ring::of(kTwo).classification() == Classification::Chain);
    CHECK(Ring::of(kZero).classification() == Classification::NonChain);
}

TEST_CASE("every element is a unit xor a zero divisor") {
    for (Elem theta : kAllElements) {
        const Ring& ring = Ring::of(theta);
        CHECK(ring.units().size() + ring.zero_divisors().size() == 16);
        for (Elem x : kAllElements) {
            if (ring.is_unit(x)) {
                CHECK(ring.mul(x, *ring.inverse(x)) == kOne);
            } else {
                bool annihilates = false;
                for (Elem y : kAllElements)
                    if (y != kZero && ring.mul(x, y) == kZero) annihilates = true;
                CHECK(annihilates);
            }
        }
    }
}

TEST_CASE("unit and zero divisor sets per theta class") {
    const auto z_a = elems({"0", "2", "2w", "2+2w"});
    const auto u_a = elems({"1", "3", "w", "3w", "1+w", "2+w", "3+w", "1+2w", "3+2w", "1+3w",
                            "2+3w", "3+3w"});
    for (const char* t : {"1+w", "3+w", "1+3w", "3+3w"}) {
        CHECK(Ring::of(parse_elem(t)).zero_divisors() == z_a);
        CHECK(Ring::of(parse_elem(t)).units() == u_a);
    }
    const auto z_b = elems({"0", "2", "w", "2w", "3w", "2+w", "2+2w", "2+3w"});
    const auto u_b = elems({"1", "3", "1+w", "3+w", "1+2w", "3+2w", "1+3w", "3+3w"});
    for (const char* t : {"2", "2+2w"}) {
        CHECK(Ring::of(parse_elem(t)).zero_divisors() == z_b);
        CHECK(Ring::of(parse_elem(t)).units() == u_b);
    }
    const auto z_c = elems({"0", "2", "2w", "1+w", "3+w", "2+2w", "1+3w", "3+3w"});
    const auto u_c = elems({"1", "3", "w", "3w", "2+w", "1+2w", "3+2w", "2+3w"});
    for (const char* t : {"3", "1+2w"}) {
        CHECK(Ring::of(parse_elem(t)).zero_divisors() == z_c);
        CHECK(Ring::of(parse_elem(t)).units() == u_c);
    }
}

TEST_CASE("ideal chains per theta class") {
    for (const char* t : {"1+w", "3+w", "1+3w", "3+3w"}) {
        const Ring& ring = Ring::of(parse_elem(t));
        const auto chain = ring.ideal_chain();
        REQUIRE(chain.size() == 3);
        CHECK(chain[0] == elems({"0"}));
        CHECK(chain[1] == elems({"0", "2", "2w", "2+2w"}));
        CHECK(chain[2].size() == 16);
        CHECK(ideal_closure(ring, kTwo) == ideal_closure(ring, kTwoW));
        CHECK(ideal_closure(ring, kTwo) == ideal_closure(ring, kTwoPlusTwoW));
    }
    for (const char* t : {"2", "2+2w"}) {
        const Ring& ring = Ring::of(parse_elem(t));
        const auto chain = ring.ideal_chain();
        REQUIRE(chain.size() == 5);
        CHECK(chain[1] == ideal_closure(ring, kTwoW));
        CHECK(chain[2] == ideal_closure(ring, kTwo));
        CHECK(chain[3] == ideal_closure(ring, kW));
        CHECK(ideal_closure(ring, kTwo) == ideal_closure(ring, kTwoPlusTwoW));
        CHECK(ideal_closure(ring, kW) == ideal_closure(ring, elem(0, 3)));
        CHECK(ideal_closure(ring, kW) == ideal_closure(ring, elem(2, 1)));
        CHECK(ideal_closure(ring, kW) == ideal_closure(ring, elem(2, 3)));
    }
    for (const char* t : {"3", "1+2w"}) {
        const Ring& ring = Ring::of(parse_elem(t));
        const auto chain = ring.ideal_chain();
        REQUIRE(chain.size() == 5);
        CHECK(chain[1] == ideal_closure(ring, kTwoPlusTwoW));
        CHECK(chain[2] == ideal_closure(ring, kTwo));
        CHECK(chain[3] == ideal_closure(ring, elem(1, 1)));
        CHECK(ideal_closure(ring, kTwo) == ideal_closure(ring, kTwoW));
        CHECK(ideal_closure(ring, elem(1, 1)) == ideal_closure(ring, elem(3, 1)));
        CHECK(ideal_closure(ring, elem(1, 1)) == ideal_closure(ring, elem(1, 3)));
        CHECK(ideal_closure(ring, elem(1, 1)) == ideal_closure(ring, elem(3, 3)));
    }
    CHECK_THROWS_AS(Ring::of(kZero).ideal_chain(), NonChainRing);
    CHECK_THROWS_AS(Ring::of(kW).ideal_chain(), NonChainRing);
}

TEST_CASE("principal ideals agree with additive/multiplicative closure") {
    for (Elem theta : kAllElements) {
        const Ring& ring = Ring::of(theta);
        for (Elem g : kAllElements) {
            const auto closure = ideal_closure(ring, g);
            const auto& ideals = ring.principal_ideals();
            CHECK(std::find(ideals.begin(), ideals.end(), closure) != ideals.end());
        }
    }
}

TEST_CASE("2x lands in the two-torsion set with the four-case split") {
    for (Elem x : kAllElements) {
        const Elem d = twice(x);
        if (x.a % 2 == 0 && x.b % 2 == 0) CHECK(d == kZero);
        if (x.a % 2 == 1 && x.b % 2 == 0) CHECK(d == kTwo);
        if (x.a % 2 == 0 && x.b % 2 == 1) CHECK(d == kTwoW);
        if (x.a % 2 == 1 && x.b % 2 == 1) CHECK(d == kTwoPlusTwoW);
    }
}

TEST_CASE("inner products") {
    const Ring& r2 = Ring::of(kTwo);
    const Word x{kTwo, kTwo};
    CHECK(r2.inner_product(x, x) == kZero);
    const Word zero{kZero, kZero};
    for (Elem a : kAllElements) {
        const Word y{a, a};
        CHECK(r2.inner_product(y, zero) == kZero);
    }
    const Ring& ra = Ring::of(elem(1, 1));
    const Word v{elem(1, 1)};
    CHECK(ra.inner_product(v, v) == elem(2, 3));
    CHECK_THROWS_AS(r2.inner_product(x, v), LengthMismatch);
}

TEST_CASE("word helpers") {
    const Word w{kOne, kTwo, kW};
    CHECK(reversed(w) == Word{kW, kTwo, kOne});
    CHECK(constant_word(kTwo, 3) == Word{kTwo, kTwo, kTwo});
    CHECK(parse_word("1,2,w") == w);
    CHECK(to_string(std::span<const Elem>(w)) == "1,2,w");
    CHECK_THROWS_AS(add(std::span<const Elem>(w), std::span<const Elem>(Word{kOne})),
                    LengthMismatch);
}
