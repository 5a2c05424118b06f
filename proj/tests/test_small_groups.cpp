#include "cayley.hpp"
#include "sturm/combi.hpp"
#include "sturm/modular.hpp"

#include <gtest/gtest.h>

using namespace sturm;

TEST(CyclicOrders, ExhaustiveCayleySearchUpTo23) {
    for (int n = 1; n <= 23; ++n) {
        oracle::CayleySearch search(n);
        const bool noncyclic_exists = search.find_noncyclic();
        EXPECT_EQ(is_cyclic_order(n), !noncyclic_exists) << "n=" << n;
        if (!noncyclic_exists) EXPECT_GT(search.tables_seen(), 0) << "n=" << n;
    }
}

TEST(CyclicOrders, NonabelianGroupOfOrder21) {
    // x -> x + 1 and x -> 2x on Z/7, written on points 1..7.
    auto g = GroupAction::generate(7, {parse_cycles("(1 2 3 4 5 6 7)", 7), parse_cycles("(2 3 5)(4 7 6)", 7)});
    EXPECT_EQ(g.order(), 21u);
    for (const auto& p : g.elements()) EXPECT_NE(order(p), 21);
    EXPECT_FALSE(is_cyclic_order(21));
}

TEST(CyclicOrders, Criterion) {
    for (int n : {1, 2, 3, 5, 7, 11, 13, 15, 17, 23, 33, 35, 51, 65, 77, 85, 87, 91, 95, 1001})
        EXPECT_TRUE(is_cyclic_order(n)) << n;
    for (int n : {4, 6, 8, 9, 10, 12, 14, 16, 18, 20, 21, 39, 55, 57})
        EXPECT_FALSE(is_cyclic_order(n)) << n;
}
