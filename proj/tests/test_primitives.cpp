#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "seghull/primitives.hpp"

using namespace seghull;
namespace prim = seghull::primitives;
using testing::error_code;

namespace {

constexpr Backend kBackends[] = {Backend::Sequential, Backend::Multicore};

std::vector<std::int32_t> random_heads(std::mt19937_64& rng, std::size_t n,
                                       double head_prob) {
  std::bernoulli_distribution is_head(head_prob);
  std::vector<std::int32_t> heads(n);
  for (auto& h : heads) h = is_head(rng) ? 1 : 0;
  if (n > 0) heads[0] = 1;
  return heads;
}

}  // namespace

TEST_CASE("inclusive scan") {
  for (const Backend b : kBackends) {
    CHECK(prim::inclusive_scan(std::vector<std::int32_t>{1, 0, 0, 1, 0}, b) ==
          std::vector<std::int32_t>{1, 1, 1, 2, 2});
    CHECK(prim::inclusive_scan(std::vector<std::int32_t>{}, b).empty());
    CHECK(prim::inclusive_scan(std::vector<std::int32_t>{1, 1, 1}, b) ==
          std::vector<std::int32_t>{1, 2, 3});
  }
}

TEST_CASE("keys from head flags") {
  for (const Backend b : kBackends) {
    CHECK(prim::keys_from_heads(std::vector<std::int32_t>{1, 0, 0, 1, 0}, b) ==
          prim::Keys{0, 0, 0, 1, 1});
    CHECK(prim::keys_from_heads(std::vector<std::int32_t>{1}, b) == prim::Keys{0});
    CHECK(prim::keys_from_heads(std::vector<std::int32_t>{1, 1, 0, 1}, b) ==
          prim::Keys{0, 1, 1, 2});
  }
}

TEST_CASE("segmented argmax") {
  for (const Backend b : kBackends) {
    const std::vector<std::int32_t> keys{0, 0, 0, 1, 1};
    const std::vector<double> values{0, 5, 2, 0, 3};
    const auto out = prim::segmented_argmax(keys, values, b);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == prim::SegmentMax{0, 5.0, 1});
    CHECK(out[1] == prim::SegmentMax{1, 3.0, 4});

    const auto tie = prim::segmented_argmax(std::vector<std::int32_t>{0, 0},
                                            std::vector<double>{7, 7}, b);
    REQUIRE(tie.size() == 1);
    CHECK(tie[0] == prim::SegmentMax{0, 7.0, 0});  // tie -> lowest index

    const auto single = prim::segmented_argmax(std::vector<std::int32_t>{0},
                                               std::vector<double>{-2}, b);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == prim::SegmentMax{0, -2.0, 0});  // negative max allowed

    CHECK(prim::segmented_argmax(std::vector<std::int32_t>{},
                                 std::vector<double>{}, b)
              .empty());
  }
}

TEST_CASE("stable partition keeps relative order in every column") {
  for (const Backend b : kBackends) {
    std::vector<std::int32_t> col{'a', 'b', 'c', 'd'};
    const std::vector<std::int32_t> flags{0, 1, 0, 1};
    const std::size_t kept = prim::stable_partition_by_flag(flags, b, col);
    CHECK(kept == 2);
    CHECK(col == std::vector<std::int32_t>{'b', 'd', 'a', 'c'});

    std::vector<double> xs{1, 2, 3, 4};
    std::vector<std::int32_t> ys{10, 20, 30, 40};
    prim::stable_partition_by_flag(flags, b, xs, ys);
    CHECK(xs == std::vector<double>{2, 4, 1, 3});  // rows move together
    CHECK(ys == std::vector<std::int32_t>{20, 40, 10, 30});

    std::vector<std::int32_t> all{5, 6, 7};
    CHECK(prim::stable_partition_by_flag(std::vector<std::int32_t>{1, 1, 1}, b, all) == 3);
    CHECK(all == std::vector<std::int32_t>{5, 6, 7});

    std::vector<std::int32_t> none{5, 6, 7};
    CHECK(prim::stable_partition_by_flag(std::vector<std::int32_t>{0, 0, 0}, b, none) == 0);
    CHECK(none == std::vector<std::int32_t>{5, 6, 7});  // order preserved

    std::vector<double> empty;
    CHECK(prim::stable_partition_by_flag(std::vector<std::int32_t>{}, b, empty) == 0);
  }
}

TEST_CASE("partition then all-ones partition is order idempotent") {
  std::mt19937_64 rng(5);
  for (const Backend b : kBackends) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = rng() % 200;
      auto flags = random_heads(rng, n, 0.4);
      if (n > 0) flags[0] = static_cast<std::int32_t>(rng() & 1);
      std::vector<double> col(n);
      for (auto& v : col) v = static_cast<double>(rng() % 1000);
      prim::stable_partition_by_flag(flags, b, col);
      const auto after_first = col;
      const std::vector<std::int32_t> ones(n, 1);
      const std::size_t kept = prim::stable_partition_by_flag(ones, b, col);
      CHECK(kept == n);
      CHECK(col == after_first);
    }
  }
}

TEST_CASE("minmax index") {
  for (const Backend b : kBackends) {
    CHECK(prim::minmax_index(std::vector<double>{3, 1, 2}, b) ==
          std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(prim::minmax_index(std::vector<double>{5, 5}, b) ==
          std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(prim::minmax_index(std::vector<double>{-1}, b) ==
          std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(error_code([&] { prim::minmax_index(std::vector<double>{}, b); }) ==
          Errc::EmptyInput);
  }
}

TEST_CASE("propagate first index") {
  for (const Backend b : kBackends) {
    CHECK(prim::propagate_first_index(std::vector<std::int32_t>{1, 0, 0, 1, 0}, b) ==
          std::vector<std::int32_t>{0, 0, 0, 3, 3});
    CHECK(prim::propagate_first_index(std::vector<std::int32_t>{1}, b) ==
          std::vector<std::int32_t>{0});
    CHECK(prim::propagate_first_index(std::vector<std::int32_t>{1, 1, 1}, b) ==
          std::vector<std::int32_t>{0, 1, 2});
    CHECK(prim::propagate_first_index(std::vector<std::int32_t>{}, b).empty());
  }
}

TEST_CASE("keys and head flags round-trip") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 500;
    const auto heads = random_heads(rng, n, 0.3);
    const auto keys = prim::keys_from_heads(heads, Backend::Sequential);
    REQUIRE(prim::valid_keys(keys));
    // reconstruct heads from key changes and convert back
    std::vector<std::int32_t> rebuilt(n);
    for (std::size_t i = 0; i < n; ++i) {
      rebuilt[i] = (i == 0 || keys[i] != keys[i - 1]) ? 1 : 0;
    }
    CHECK(rebuilt == heads);
    CHECK(prim::keys_from_heads(rebuilt, Backend::Sequential) == keys);
  }
}

TEST_CASE("single-segment argmax agrees with minmax_index") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    std::vector<double> values(n);
    for (auto& v : values) v = static_cast<double>(static_cast<int>(rng() % 64)) - 32.0;
    const std::vector<std::int32_t> keys(n, 0);
    const auto seg = prim::segmented_argmax(keys, values, Backend::Sequential);
    const auto [lo, hi] = prim::minmax_index(values, Backend::Sequential);
    (void)lo;
    REQUIRE(seg.size() == 1);
    CHECK(seg[0].value == values[hi]);
    CHECK(seg[0].index == hi);
  }
}

TEST_CASE("backends produce bit-identical outputs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    // lengths biased to cross the parallel cutover now and then
    const std::size_t n = (trial % 10 == 0) ? 40000 + rng() % 40000 : rng() % 2000;
    const auto heads = random_heads(rng, n, 0.1);
    const auto keys = prim::keys_from_heads(heads, Backend::Sequential);
    std::vector<double> values(n);
    for (auto& v : values) v = static_cast<double>(static_cast<int>(rng() % 100)) / 7.0;
    std::vector<std::int32_t> flags(n);
    for (auto& f : flags) f = static_cast<std::int32_t>(rng() & 1);

    CHECK(prim::inclusive_scan(heads, Backend::Sequential) ==
          prim::inclusive_scan(heads, Backend::Multicore));
    CHECK(prim::keys_from_heads(heads, Backend::Sequential) ==
          prim::keys_from_heads(heads, Backend::Multicore));
    CHECK(prim::segmented_argmax(keys, values, Backend::Sequential) ==
          prim::segmented_argmax(keys, values, Backend::Multicore));
    CHECK(prim::propagate_first_index(heads, Backend::Sequential) ==
          prim::propagate_first_index(heads, Backend::Multicore));
    if (n > 0) {
      CHECK(prim::minmax_index(values, Backend::Sequential) ==
            prim::minmax_index(values, Backend::Multicore));
    }
    auto seq_vals = values;
    auto seq_keys = keys;
    auto par_vals = values;
    auto par_keys = keys;
    const std::size_t kept_seq =
        prim::stable_partition_by_flag(flags, Backend::Sequential, seq_vals, seq_keys);
    const std::size_t kept_par =
        prim::stable_partition_by_flag(flags, Backend::Multicore, par_vals, par_keys);
    CHECK(kept_seq == kept_par);
    CHECK(seq_vals == par_vals);
    CHECK(seq_keys == par_keys);
  }
}
