#include <gtest/gtest.h>

#include <sstream>

#include <loopkit/errors.hpp>
#include <loopkit/loop_table.hpp>
#include <loopkit/models.hpp>
#include <loopkit/table_io.hpp>

#include "support.hpp"

namespace loopkit {
namespace {

using testing::kExampleRows;

TEST(LoopTable, ExampleValidates) {
  const auto v = validate(kExampleRows);
  EXPECT_EQ(v.table.order(), 8);
  EXPECT_TRUE(v.relabel.is_identity());
  EXPECT_EQ(v.table, models::example_3_3());
}

TEST(LoopTable, TrivialLoop) {
  const auto v = validate({{0}});
  EXPECT_EQ(v.table.order(), 1);
  EXPECT_EQ(v.table.mul(0, 0), 0);
}

TEST(LoopTable, RejectsDuplicateInRow) {
  try {
    validate({{0, 1}, {1, 1}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationError::Kind::NotLatinSquare);
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
  }
}

TEST(LoopTable, RejectsDuplicateInColumn) {
  try {
    validate({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationError::Kind::NotLatinSquare);
  }
}

TEST(LoopTable, RejectsNonSquareAndOutOfRange) {
  try {
    validate({{0, 1}, {1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationError::Kind::NonSquareInput);
  }
  try {
    validate({{0, 2}, {1, 0}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationError::Kind::EntryOutOfRange);
  }
}

TEST(LoopTable, RejectsLatinSquareWithoutIdentity) {
  try {
    validate({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    // (x, y) -> x + y + 1 mod 3 has identity 2.
  } catch (const ValidationError&) {
    FAIL() << "a quasigroup with an identity must be accepted";
  }
  try {
    validate({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationError::Kind::NoIdentityElement);
  }
}

TEST(LoopTable, RelabelsIdentityToZero) {
  // Z3 written additively with 1 playing the role of 0.
  const auto v = validate({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  EXPECT_EQ(v.relabel(2), 0);
  EXPECT_EQ(v.relabel(0), 2);
  for (int x = 0; x < 3; ++x) {
    EXPECT_EQ(v.table.mul(0, x), x);
    EXPECT_EQ(v.table.mul(x, 0), x);
  }
}

TEST(LoopTable, ExampleProducts) {
  const auto l = models::example_3_3();
  EXPECT_EQ(l.mul(2, 1), 4);
  EXPECT_EQ(l.mul(7, 7), 0);
  EXPECT_EQ(l.mul(6, 3), 5);
  for (int x = 0; x < 8; ++x) EXPECT_EQ(l.mul(0, x), x);
}

TEST(LoopTable, Divisions) {
  const auto l = models::example_3_3();
  EXPECT_EQ(l.ldiv(2, 4), 1);
  EXPECT_EQ(l.rdiv(4, 1), 2);
  for (int a = 0; a < 8; ++a) {
    EXPECT_EQ(l.ldiv(0, a), a);
    EXPECT_EQ(l.rdiv(a, 0), a);
    for (int b = 0; b < 8; ++b) {
      EXPECT_EQ(l.mul(a, l.ldiv(a, b)), b);
      EXPECT_EQ(l.ldiv(a, l.mul(a, b)), b);
      EXPECT_EQ(l.mul(l.rdiv(a, b), b), a);
      EXPECT_EQ(l.rdiv(l.mul(a, b), b), a);
    }
  }
}

TEST(LoopTable, Translations) {
  const auto l = models::example_3_3();
  EXPECT_TRUE(l.left_translation(0).is_identity());
  EXPECT_EQ(l.left_translation(2), Permutation({2, 4, 0, 6, 1, 7, 3, 5}));
  EXPECT_EQ(l.right_translation(2)(1), 3);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      EXPECT_EQ(l.left_translation(x)(y), l.mul(x, y));
      EXPECT_EQ(l.right_translation(x)(y), l.mul(y, x));
    }
  }
}

TEST(LoopTable, Inverses) {
  const auto l = models::example_3_3();
  EXPECT_EQ(l.right_inverse(0), 0);
  EXPECT_EQ(l.right_inverse(1), 1);
  EXPECT_EQ(l.right_inverse(2), 2);
  EXPECT_EQ(l.right_inverse(3), 4);
  for (int y = 0; y < 8; ++y) {
    EXPECT_EQ(l.mul(y, l.right_inverse(y)), 0);
    EXPECT_EQ(l.mul(l.left_inverse(y), y), 0);
  }
}

TEST(LoopTable, OppositeAndRelabel) {
  const auto l = models::example_3_3();
  const auto op = l.opposite();
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ(op.mul(a, b), l.mul(b, a));
  EXPECT_EQ(op.opposite(), l);
  const Permutation swap({0, 1, 2, 3, 4, 5, 7, 6});
  const auto r = l.relabeled(swap);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ(r.mul(swap(a), swap(b)), swap(l.mul(a, b)));
}

TEST(Permutation, Basics) {
  const Permutation p({0, 2, 3, 1});
  EXPECT_EQ(p * p.inverse(), Permutation::identity(4));
  EXPECT_EQ((p * Permutation({0, 1, 3, 2}))(2), 1);
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
}

TEST(TableIo, ParsesExampleFileVerbatim) {
  std::istringstream in(
      "# comment\n8\n0 1 2 3 4 5 6 7\n1 0 3 2 5 4 7 6\n2 4 0 6 1 7 3 5\n3 5 1 7 0 6 2 4\n"
      "4 2 6 0 7 1 5 3\n5 3 7 1 6 0 4 2\n6 7 4 5 2 3 0 1\n7 6 5 4 3 2 1 0\n");
  EXPECT_EQ(read_table(in).table, models::example_3_3());
}

TEST(TableIo, RoundTrip) {
  const auto l = models::example_3_3();
  std::istringstream in(to_string(l));
  EXPECT_EQ(read_table(in).table, l);
  std::istringstream h(to_string(models::heisenberg_27()));
  EXPECT_EQ(read_table(h).table, models::heisenberg_27());
}

TEST(TableIo, StreamOfTables) {
  std::istringstream in("1\n0\n\n2\n0 1\n1 0\n# stats: {}\n");
  const auto raws = parse_raw_tables(in);
  ASSERT_EQ(raws.size(), 2u);
  EXPECT_EQ(raws[1].size(), 2u);
}

TEST(TableIo, FormatErrors) {
  std::istringstream short_row("2\n0 1\n1\n");
  EXPECT_THROW(read_table(short_row), Error);
  std::istringstream junk("2\n0 1\n1 x\n");
  EXPECT_THROW(read_table(junk), FormatError);
  std::istringstream trailing("1\n0\n5\n");
  EXPECT_THROW(read_table(trailing), FormatError);
}

}  // namespace
}  // namespace loopkit
