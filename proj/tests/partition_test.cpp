#include <gtest/gtest.h>

#include "eqschub/errors.hpp"
#include "eqschub/partition.hpp"
#include "support.hpp"

using namespace eqs;

TEST(Partition, ParseAndTrim) {
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ(Partition::parse("3,1,0,0"), (Partition{3, 1}));
  EXPECT_THROW(Partition::parse(" 2, 2"), UsageError);
  EXPECT_THROW(Partition::parse("1,,2"), UsageError);
  EXPECT_THROW(Partition::parse("1,2"), UsageError);
  EXPECT_THROW(Partition::parse("a"), UsageError);
  EXPECT_THROW(Partition::parse("-1"), UsageError);
}

TEST(Partition, BasicQueries) {
  const Partition p{3, 2, 2};
  EXPECT_EQ(p.size(), 7u);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p[1], 3u);
  EXPECT_EQ(p[4], 0u);
  EXPECT_TRUE(p.fits_box(3, 3));
  EXPECT_FALSE(p.fits_box(2, 3));
  EXPECT_FALSE(p.fits_box(3, 2));
  EXPECT_TRUE(p.contains(Partition{2, 2}));
  EXPECT_FALSE(p.contains(Partition{4}));
  EXPECT_EQ(p.padded(5), (std::vector<unsigned>{3, 2, 2, 0, 0}));
}

TEST(Partition, AddBoxRespectsRowLimit) {
  const Partition p{1};
  auto grown = p.add_box(2);
  std::sort(grown.begin(), grown.end());
  EXPECT_EQ(grown, (std::vector<Partition>{Partition{1, 1}, Partition{2}}));
  EXPECT_EQ(p.add_box(1), (std::vector<Partition>{Partition{2}}));
  EXPECT_EQ(Partition().add_box(3), (std::vector<Partition>{Partition{1}}));
}

TEST(Partition, BoxEnumerationCountsBinomials) {
  EXPECT_EQ(partitions_in_box(2, 2).size(), 6u);
  EXPECT_EQ(partitions_in_box(3, 3).size(), 20u);
  EXPECT_EQ(partitions_in_box(4, 4).size(), 70u);
  EXPECT_EQ(partitions_in_box(1, 0).size(), 1u);
  const auto box = partitions_in_box(3, 2);
  EXPECT_TRUE(std::is_sorted(box.begin(), box.end()));
}

TEST(Partition, PartitionsOfSize) {
  EXPECT_EQ(partitions_of(4, 10).size(), 5u);
  EXPECT_EQ(partitions_of(4, 2).size(), 3u);
  EXPECT_EQ(partitions_of(0, 3), (std::vector<Partition>{Partition()}));
}

TEST(StrictSequence, RhoAndShift) {
  EXPECT_EQ(StrictSequence::rho(3), (StrictSequence{2, 1, 0}));
  const StrictSequence nu = StrictSequence::from_partition(Partition{2}, 3);
  EXPECT_EQ(nu, (StrictSequence{4, 1, 0}));
  EXPECT_EQ(nu.to_partition(), Partition{2});
  EXPECT_THROW(StrictSequence({1, 1}), UsageError);
  EXPECT_THROW(StrictSequence::from_partition(Partition{1, 1, 1}, 2), UsageError);
}
