#include <gtest/gtest.h>

#include "dsmfuse/error.hpp"
#include "dsmfuse/lattice.hpp"
#include "fixtures.hpp"

using namespace dsmfuse;
using fixtures::prop;

namespace {

const Frame kTp2({"p", "b", "f", "nf"});
const Frame kThree = Frame::numbered(3);

IndexSet bits(std::initializer_list<std::size_t> indices) {
  IndexSet s = 0;
  for (auto i : indices) s |= IndexSet{1} << i;
  return s;
}

}  // namespace

TEST(Frame, RejectsEmptyDuplicateAndOversized) {
  EXPECT_THROW(Frame({}), InputError);
  EXPECT_THROW(Frame({"a", "a"}), InputError);
  EXPECT_THROW(Frame::numbered(65), InputError);
  EXPECT_NO_THROW(Frame::numbered(64));
}

TEST(Frame, NumberedNamesAndLookup) {
  const Frame f = Frame::numbered(3);
  EXPECT_EQ(f.names(), (std::vector<std::string>{"t1", "t2", "t3"}));
  EXPECT_EQ(f.index_of("t2"), 1u);
  EXPECT_FALSE(f.find("t4"));
  EXPECT_THROW((void)f.index_of("t4"), InputError);
}

TEST(Canonicalize, AbsorbsSupersetTerms) {
  const std::vector<IndexSet> terms{bits({0, 3}), bits({0})};
  const auto p = Proposition::canonicalize(4, terms);
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.terms()[0], bits({0}));
}

TEST(Canonicalize, HybridH1CollapsesToTwoTerms) {
  const std::vector<IndexSet> terms{bits({0, 3}), bits({1, 2}), bits({0})};
  EXPECT_EQ(Proposition::canonicalize(4, terms), prop(kTp2, "b&f | p"));
  EXPECT_EQ(Proposition::canonicalize(4, terms).terms().size(), 2u);
}

TEST(Canonicalize, EmptyListIsBottom) {
  EXPECT_TRUE(Proposition::canonicalize(4, {}).is_empty());
  EXPECT_EQ(Proposition::canonicalize(4, {}), Proposition::empty(4));
}

TEST(Canonicalize, OrderIsIndependentOfInputOrder) {
  const std::vector<IndexSet> a{bits({1, 2}), bits({0, 3}), bits({0, 1})};
  const std::vector<IndexSet> b{bits({0, 1}), bits({1, 2}), bits({0, 3}), bits({1, 2})};
  EXPECT_EQ(Proposition::canonicalize(4, a), Proposition::canonicalize(4, b));
}

TEST(Canonicalize, RejectsOutOfRangeAndEmptyTerms) {
  const std::vector<IndexSet> outside{bits({4})};
  EXPECT_THROW((void)Proposition::canonicalize(4, outside), InputError);
  const std::vector<IndexSet> zero{0};
  EXPECT_THROW((void)Proposition::canonicalize(4, zero), InputError);
}

TEST(Conjoin, TripleMeetOfTp2Conflicts) {
  const auto x = conjoin(conjoin(prop(kTp2, "p&nf"), prop(kTp2, "b&f")), prop(kTp2, "p&b"));
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms()[0], bits({0, 1, 2, 3}));
}

TEST(Conjoin, AbsorptionAndBottom) {
  EXPECT_EQ(conjoin(prop(kThree, "t1 | t2"), prop(kThree, "t1")), prop(kThree, "t1"));
  EXPECT_TRUE(conjoin(prop(kThree, "t1 | t2"), Proposition::empty(3)).is_empty());
}

TEST(Conjoin, DistributesOverTerms) {
  EXPECT_EQ(conjoin(prop(kThree, "t1 | t2"), prop(kThree, "t3")), prop(kThree, "t1&t3 | t2&t3"));
}

TEST(Conjoin, RejectsWidthMismatch) {
  EXPECT_THROW((void)conjoin(prop(kThree, "t1"), prop(kTp2, "p")), FrameMismatch);
  EXPECT_THROW((void)disjoin(prop(kThree, "t1"), prop(kTp2, "p")), FrameMismatch);
}

TEST(Disjoin, BuildsH2) {
  const auto h2 = disjoin(disjoin(prop(kTp2, "p&nf"), prop(kTp2, "b&f")), prop(kTp2, "p&b"));
  EXPECT_EQ(h2.terms().size(), 3u);
  EXPECT_EQ(h2, prop(kTp2, "p&nf | b&f | p&b"));
}

TEST(Disjoin, IdentityAndAbsorption) {
  EXPECT_EQ(disjoin(prop(kThree, "t2&t3"), Proposition::empty(3)), prop(kThree, "t2&t3"));
  EXPECT_EQ(disjoin(prop(kThree, "t1"), prop(kThree, "t1&t2")), prop(kThree, "t1"));
}

TEST(UOf, ExamplesAndConvention) {
  EXPECT_EQ(u_of(prop(kThree, "t1&t2")), prop(kThree, "t1 | t2"));
  EXPECT_EQ(u_of(prop(kThree, "t1 | t2")), prop(kThree, "t1 | t2"));
  EXPECT_EQ(u_of(prop(kThree, "t1&t2 | t3")), prop(kThree, "t1 | t2 | t3"));
  EXPECT_TRUE(u_of(Proposition::empty(3)).is_empty());
}

TEST(TotalIgnorance, JoinOfAllSingletons) {
  EXPECT_EQ(total_ignorance(2), prop(Frame::numbered(2), "t1 | t2"));
  EXPECT_EQ(total_ignorance(4), prop(kTp2, "p | b | f | nf"));
  EXPECT_EQ(total_ignorance(1), prop(Frame::numbered(1), "t1"));
}

TEST(Model, KindFollowsConstraints) {
  EXPECT_EQ(Model::free(kTp2).kind(), ModelKind::free);
  EXPECT_EQ(Model::shafer(kTp2).kind(), ModelKind::shafer);
  EXPECT_EQ(fixtures::tp2_model().kind(), ModelKind::hybrid);
  const std::vector<IndexSet> all_pairs{bits({0, 1}), bits({0, 2}), bits({1, 2})};
  EXPECT_EQ(Model(kThree, all_pairs).kind(), ModelKind::shafer);
}

TEST(Model, ConstraintsAreMinimized) {
  const std::vector<IndexSet> c{bits({0, 1, 2}), bits({0, 1})};
  const Model m(kThree, c);
  ASSERT_EQ(m.constraints().size(), 1u);
  EXPECT_EQ(m.constraints()[0], bits({0, 1}));
}

TEST(Model, RejectsSingletonConstraint) {
  const std::vector<IndexSet> c{bits({0})};
  EXPECT_THROW(Model(kThree, c), InputError);
}

TEST(Reduce, ContradictionVanishes) {
  const Model m = fixtures::tp2_model();
  EXPECT_TRUE(reduce_under_model(prop(kTp2, "p&b&f&nf"), m).is_empty());
}

TEST(Reduce, UntouchedTermsSurvive) {
  const Model m = fixtures::tp2_model();
  const auto h2 = prop(kTp2, "p&nf | b&f | p&b");
  EXPECT_EQ(reduce_under_model(h2, m), h2);
  EXPECT_EQ(reduce_under_model(prop(kTp2, "f&nf | p"), m), prop(kTp2, "p"));
}

TEST(Reduce, FreeModelIsIdentity) {
  const auto a = prop(kTp2, "f&nf | p&b");
  EXPECT_EQ(reduce_under_model(a, Model::free(kTp2)), a);
}

TEST(Leq, Examples) {
  const Model m = fixtures::tp2_model();
  EXPECT_TRUE(leq(prop(kTp2, "p&b&f"), prop(kTp2, "f"), Model::free(kTp2)));
  EXPECT_FALSE(leq(prop(kTp2, "b&f | p"), prop(kTp2, "p&nf | b&f | p&b"), m));
  EXPECT_TRUE(leq(prop(kTp2, "p&b&nf"), prop(kTp2, "p&nf | b&f | p&b"), m));
  EXPECT_TRUE(leq(Proposition::empty(4), prop(kTp2, "f"), m));
  EXPECT_TRUE(leq(prop(kTp2, "f&nf"), Proposition::empty(4), m));
  EXPECT_FALSE(leq(prop(kTp2, "f&nf"), Proposition::empty(4), Model::free(kTp2)));
}

TEST(Proposition, SupportAndOrdering) {
  EXPECT_EQ(prop(kTp2, "p&b | f").support(), bits({0, 1, 2}));
  EXPECT_LT(Proposition::empty(4), prop(kTp2, "p"));
  EXPECT_LT(prop(kTp2, "p"), prop(kTp2, "b"));
}
