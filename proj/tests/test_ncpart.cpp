#include <doctest.h>

#include <set>

#include <freeprob/errors.hpp>
#include <freeprob/ncpart.hpp>

#include "oracles.hpp"

using namespace freeprob;

namespace
{

NCPartition P(int n, std::vector<Block> blocks)
{
    return NCPartition(n, std::move(blocks));
}

std::vector<Block> canonical(oracle::Blocks b)
{
    for (auto& x : b) {
        std::sort(x.begin(), x.end());
    }
    std::sort(b.begin(), b.end());
    return b;
}

} // namespace

TEST_CASE("partitions are validated and canonicalized")
{
    const auto p = P(4, {{3, 2}, {4, 1}});
    CHECK(p.blocks() == std::vector<Block>{{1, 4}, {2, 3}});
    CHECK(to_string(p) == "[[1,4],[2,3]]");
    CHECK_THROWS_AS(P(4, {{1, 3}, {2, 4}}), ValidationError);
    CHECK_THROWS_AS(P(3, {{1, 2}}), ValidationError);
    CHECK_THROWS_AS(P(3, {{1, 2}, {2, 3}}), ValidationError);
    CHECK_THROWS_AS(P(3, {{1, 2}, {}, {3}}), ValidationError);
    CHECK_THROWS_AS(P(2, {{1, 3}}), ValidationError);
}

TEST_CASE("is_noncrossing")
{
    CHECK_FALSE(is_noncrossing(4, {{1, 3}, {2, 4}}));
    CHECK(is_noncrossing(4, {{1, 4}, {2, 3}}));
    CHECK(is_noncrossing(3, {{1}, {2}, {3}}));
    CHECK_FALSE(is_noncrossing(6, {{1, 4}, {2, 6}, {3}, {5}}));
    CHECK_THROWS_AS(is_noncrossing(3, {{1, 2}}), ValidationError);
}

TEST_CASE("is_noncrossing agrees with the brute-force crossing test")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& b : oracle::set_partitions(n)) {
            CHECK(is_noncrossing(n, b) == !oracle::has_crossing(b));
        }
    }
}

TEST_CASE("enumerate_nc matches the filtered set partitions")
{
    for (int n = 1; n <= 8; ++n) {
        const auto nc = enumerate_nc(n);
        CHECK(static_cast<long long>(nc.size()) == oracle::catalan(n));
        std::set<std::vector<Block>> ours;
        for (const auto& p : nc) {
            ours.insert(p.blocks());
        }
        CHECK(ours.size() == nc.size());
        if (n <= 7) {
            std::set<std::vector<Block>> brute;
            for (const auto& b : oracle::noncrossing_partitions(n)) {
                brute.insert(canonical(b));
            }
            CHECK(ours == brute);
        }
        CHECK(std::is_sorted(nc.begin(), nc.end()));
    }
    CHECK(enumerate_nc(1).front() == NCPartition::one(1));
    CHECK(enumerate_nc(6).size() == 132);
    CHECK_THROWS_AS(enumerate_nc(0), SizeError);
    CHECK_THROWS_AS(enumerate_nc(13), SizeError);
}

TEST_CASE("kreweras examples")
{
    CHECK(kreweras(P(3, {{1, 2}, {3}})) == P(3, {{1}, {2, 3}}));
    CHECK(kreweras(P(4, {{1, 2}, {3, 4}})) == P(4, {{1}, {2, 4}, {3}}));
    CHECK(kreweras(NCPartition::one(4)) == NCPartition::zero(4));
    CHECK(kreweras(NCPartition::zero(4)) == NCPartition::one(4));
    CHECK(kreweras(NCPartition::one(1)) == NCPartition::one(1));
}

TEST_CASE("kreweras agrees with the interleaved-set definition")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            CHECK(kreweras(p).blocks() == canonical(oracle::kreweras(n, p.blocks())));
        }
    }
}

TEST_CASE("kreweras invariants")
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            const auto k = kreweras(p);
            CHECK(p.block_count() + k.block_count() == static_cast<std::size_t>(n + 1));
            if (n >= 2) {
                CHECK_FALSE(k == p);
            }
            CHECK(kreweras_squared_shift(p) == cyclic_shift(p, -1));
            CHECK(kreweras(kreweras(k)) == cyclic_shift(k, -1));
            auto power = p;
            for (int i = 0; i < 4; ++i) {
                power = kreweras(power);
            }
            CHECK(power == cyclic_shift(p, -2));
            power = p;
            for (int i = 0; i < 2 * n; ++i) {
                power = kreweras(power);
            }
            CHECK(power == p);
        }
    }
    CHECK(kreweras_squared_shift(P(2, {{1}, {2}})) == P(2, {{1}, {2}}));
    CHECK(kreweras_squared_shift(NCPartition::one(1)) == NCPartition::one(1));
}

TEST_CASE("nc_join")
{
    const auto p = P(4, {{1, 3}, {2}, {4}});
    CHECK(nc_join(p, NCPartition::zero(4)) == p);
    CHECK(nc_join(p, NCPartition::one(4)) == NCPartition::one(4));
    CHECK(nc_join(p, P(4, {{2, 4}, {1}, {3}})) == NCPartition::one(4));
    CHECK(nc_join(P(5, {{1, 2}, {3}, {4}, {5}}), P(5, {{1}, {2, 3}, {4, 5}})) == P(5, {{1, 2, 3}, {4, 5}}));
    CHECK_THROWS_AS(nc_join(p, NCPartition::one(3)), ValidationError);
}

TEST_CASE("nc_join is commutative, associative and idempotent")
{
    for (int n = 1; n <= 5; ++n) {
        const auto ps = enumerate_nc(n);
        for (const auto& a : ps) {
            CHECK(nc_join(a, a) == a);
            for (const auto& b : ps) {
                const auto ab = nc_join(a, b);
                CHECK(ab == nc_join(b, a));
                for (const auto& c : ps) {
                    CHECK(nc_join(ab, c) == nc_join(a, nc_join(b, c)));
                }
            }
        }
    }
    const auto ps = enumerate_nc(6);
    for (std::size_t i = 0; i < ps.size(); i += 7) {
        for (std::size_t j = 0; j < ps.size(); j += 5) {
            CHECK(nc_join(ps[i], ps[j]) == nc_join(ps[j], ps[i]));
        }
    }
}

TEST_CASE("interval_partition")
{
    const std::vector<int> halves{2, 4};
    CHECK(interval_partition(4, halves) == P(4, {{1, 2}, {3, 4}}));
    const std::vector<int> whole{3};
    CHECK(interval_partition(3, whole) == NCPartition::one(3));
    const std::vector<int> singles{1, 2, 3};
    CHECK(interval_partition(3, singles) == NCPartition::zero(3));
    const std::vector<int> bad_end{1, 2};
    CHECK_THROWS_AS(interval_partition(3, bad_end), ValidationError);
    const std::vector<int> not_increasing{2, 2, 3};
    CHECK_THROWS_AS(interval_partition(3, not_increasing), ValidationError);
    const std::vector<int> none;
    CHECK_THROWS_AS(interval_partition(3, none), ValidationError);
}

TEST_CASE("nc_table is consistent")
{
    for (int n = 1; n <= 7; ++n) {
        const auto& t = nc_table(n);
        CHECK(t.partitions == enumerate_nc(n));
        CHECK(t.partitions[t.zero_index] == NCPartition::zero(n));
        CHECK(t.partitions[t.one_index] == NCPartition::one(n));
        for (std::size_t k = 0; k < t.partitions.size(); ++k) {
            CHECK(t.partitions[t.kreweras_index[k]] == kreweras(t.partitions[k]));
            CHECK(t.index_of(t.partitions[k]) == k);
        }
    }
    CHECK(&nc_table(5) == &nc_table(5));
}
