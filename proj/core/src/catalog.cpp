#include "confembed/catalog.hpp"

#include "confembed/error.hpp"

namespace confembed {

namespace {

IntVec unit(int rank, int i, std::int64_t mult = 1) {
  IntVec v(rank, 0);
  v[i - 1] = mult;
  return v;
}

Weight weight_of(LieType t, const IntVec& coords) { return root_system(t)->weight(coords); }

std::uint64_t dim_of(const std::vector<Weight>& ws) {
  BigInt d = 1;
  for (const auto& w : ws) d *= weyl_dim(w);
  return static_cast<std::uint64_t>(d);
}

BranchingComponent component(int grading, std::vector<Weight> weights, Rational center_norm = 0) {
  BranchingComponent c;
  c.grading = grading;
  c.dim = dim_of(weights);
  c.factor_weights = std::move(weights);
  c.center_norm = std::move(center_norm);
  return c;
}

// g0 simple, g = g0 + V(mu) graded by an involution.
EmbeddingSpec involution_pair(std::string name, std::optional<int> l, LieType g, LieType g0, int index,
                              const IntVec& mu) {
  EmbeddingSpec s;
  s.name = std::move(name);
  s.rank_parameter = l;
  s.ambient = g;
  s.automorphism_order = 2;
  s.factors = {SubalgebraFactor::simple(g0, index)};
  s.components = {component(1, {weight_of(g0, mu)})};
  return s;
}

Annotation literature(std::string resolution, std::string source) {
  Annotation a;
  a.kind = AnnotationKind::LiteratureResult;
  a.resolution = std::move(resolution);
  a.source = std::move(source);
  return a;
}

EmbeddingSpec cl_in_a2l_1(int l) {
  const LieType c{Family::C, l};
  auto s = involution_pair("cl-in-a2l-1", l, {Family::A, 2 * l - 1}, c, 1, unit(l, 2));
  s.annotations.push_back(literature(
      "complete reducibility at level -1 was established earlier by an independent fusion-rule argument; "
      "integral-weight summands are not re-checked here",
      "prior work on the (A_{2l-1}, C_l) pair at level -1"));
  return s;
}

EmbeddingSpec bl_in_a2l(int l) {
  const LieType b{Family::B, l};
  auto s = involution_pair("bl-in-a2l", l, {Family::A, 2 * l}, b, 2, unit(l, 1, 2));
  s.annotations.push_back(literature("positive integer level conformal embedding; known from the literature",
                                     "classification of conformal embeddings at positive level"));
  return s;
}

EmbeddingSpec a1_in_a2(int) {
  const LieType a1{Family::A, 1};
  auto s = involution_pair("a1-in-a2", std::nullopt, {Family::A, 2}, a1, 4, {4});
  s.annotations.push_back(literature("positive integer level conformal embedding; known from the literature",
                                     "classification of conformal embeddings at positive level"));
  return s;
}

EmbeddingSpec bl1_in_dl(int l) {
  const LieType b{Family::B, l - 1};
  return involution_pair("bl1-in-dl", l, {Family::D, l}, b, 1, unit(l - 1, 1));
}

EmbeddingSpec b3_in_d4(int) {
  const LieType b3{Family::B, 3};
  return involution_pair("b3-in-d4", std::nullopt, {Family::D, 4}, b3, 1, unit(3, 1));
}

EmbeddingSpec dl_in_bl(int l) {
  const LieType d{Family::D, l};
  return involution_pair("dl-in-bl", l, {Family::B, l}, d, 1, unit(l, 1));
}

EmbeddingSpec f4_in_e6(int) {
  const LieType f4{Family::F, 4};
  auto s = involution_pair("f4-in-e6", std::nullopt, {Family::E, 6}, f4, 1, unit(4, 4));
  Annotation a;
  a.kind = AnnotationKind::SingularVectorAbsent;
  a.weight = weight_of(f4, unit(4, 3));
  a.resolution = "integral conformal weight, but no F4-singular vector of this weight survives in L_E6(-3,0)";
  a.source = "direct computation with E6 root vectors";
  s.annotations.push_back(std::move(a));
  return s;
}

EmbeddingSpec a2_in_g2(int) {
  const LieType a2{Family::A, 2};
  EmbeddingSpec s;
  s.name = "a2-in-g2";
  s.ambient = {Family::G, 2};
  s.automorphism_order = 3;
  s.factors = {SubalgebraFactor::simple(a2, 1)};
  s.components = {component(1, {weight_of(a2, {1, 0})}), component(2, {weight_of(a2, {0, 1})})};
  return s;
}

EmbeddingSpec g2_in_d4(int) {
  const LieType g2{Family::G, 2};
  EmbeddingSpec s;
  s.name = "g2-in-d4";
  s.ambient = {Family::D, 4};
  s.automorphism_order = 3;
  s.factors = {SubalgebraFactor::simple(g2, 1)};
  s.components = {component(1, {weight_of(g2, {1, 0})}), component(2, {weight_of(g2, {1, 0})})};
  Annotation a;
  a.kind = AnnotationKind::DecompositionExtension;
  a.weight = weight_of(g2, {0, 1});
  a.grading = 0;
  a.resolution =
      "L_D4(-2,0) contains a unique G2-singular vector of this weight; it is fixed by the order-3 "
      "automorphism and odd under the involution fixing B3, and generates the extra summand L_G2(-2,w2)";
  a.source = "explicit singular vector in L_D4(-2,0) and the chain G2 < B3 < D4";
  s.annotations.push_back(std::move(a));
  return s;
}

EmbeddingSpec g2_in_b3(int) {
  const LieType g2{Family::G, 2};
  const LieType b3{Family::B, 3};
  EmbeddingSpec s;
  s.name = "g2-in-b3";
  s.ambient = b3;
  s.factors = {SubalgebraFactor::simple(g2, 1)};
  s.components = {component(1, {weight_of(g2, {1, 0})})};

  Annotation absent;
  absent.kind = AnnotationKind::SingularVectorAbsent;
  absent.weight = weight_of(g2, {0, 1});
  absent.resolution =
      "the only G2-singular vector of this weight in L_D4(-2,0) is odd under the involution fixing B3, "
      "so it lies in L_B3(-2,w1) and not in L_B3(-2,0)";
  absent.source = "chain G2 < B3 < D4 at level -2";
  s.annotations.push_back(std::move(absent));

  const auto rs = root_system(g2);
  Annotation vacuum;
  vacuum.kind = AnnotationKind::DecompositionClaim;
  vacuum.ambient_weight = weight_of(b3, {0, 0, 0});
  vacuum.summands = {rs->zero(), rs->fundamental(1)};
  vacuum.resolution = "fusion rules of the w1 summand together with the absence of a w2 singular vector";
  vacuum.source = "chain G2 < B3 < D4 at level -2";
  s.annotations.push_back(std::move(vacuum));

  Annotation odd;
  odd.kind = AnnotationKind::DecompositionClaim;
  odd.ambient_weight = weight_of(b3, {1, 0, 0});
  odd.summands = {rs->fundamental(1), rs->fundamental(2)};
  odd.resolution = "the w2 singular vector of L_D4(-2,0) generates the second summand of the odd part";
  odd.source = "chain G2 < B3 < D4 at level -2";
  s.annotations.push_back(std::move(odd));
  return s;
}

// g0 = Cartan subalgebra of a simply laced g; one component per root.
EmbeddingSpec cartan_in(std::string name, LieType g) {
  const auto rs = root_system(g);
  EmbeddingSpec s;
  s.name = std::move(name);
  s.rank_parameter = g.rank;
  s.ambient = g;
  s.factors = {SubalgebraFactor::abelian(g.rank)};
  int label = 1;
  for (const auto& alpha : rs->positive_roots()) {
    const Rational norm = inner_product(alpha, alpha);
    s.components.push_back(component(label++, {}, norm));
    s.components.push_back(component(label++, {}, norm));
  }
  return s;
}

// g0 = gl(l) as the Levi subalgebra of g obtained by deleting `node`; the two
// components are the parts where the a_node coefficient is +1 and -1.
EmbeddingSpec gl_levi(std::string name, int l, LieType g, int node, int index, const IntVec& plus,
                      const IntVec& minus) {
  const LieType a{Family::A, l - 1};
  const Rational center = levi_center_norm(*root_system(g), node);
  EmbeddingSpec s;
  s.name = std::move(name);
  s.rank_parameter = l;
  s.ambient = g;
  s.factors = {SubalgebraFactor::abelian(1), SubalgebraFactor::simple(a, index)};
  s.components = {component(1, {weight_of(a, plus)}, center), component(2, {weight_of(a, minus)}, center)};
  return s;
}

EmbeddingSpec gl_in_sp(int l) {
  return gl_levi("gl-in-sp", l, {Family::C, l}, l, 2, unit(l - 1, 1, 2), unit(l - 1, l - 1, 2));
}

EmbeddingSpec gl_in_sl(int l) {
  return gl_levi("gl-in-sl", l, {Family::A, l}, l, 1, unit(l - 1, 1), unit(l - 1, l - 1));
}

EmbeddingSpec gl_in_so(int l) {
  return gl_levi("gl-in-so", l, {Family::D, l}, l, 1, unit(l - 1, 2), unit(l - 1, l - 2));
}

std::vector<CatalogEntry> build_entries() {
  auto fixed = [](std::string name, std::string g, std::string g0, EmbeddingSpec (*fn)(int)) {
    return CatalogEntry{std::move(name), std::move(g), std::move(g0), false, 0, 0, fn};
  };
  auto family = [](std::string name, std::string g, std::string g0, int lo, int hi, EmbeddingSpec (*fn)(int)) {
    return CatalogEntry{std::move(name), std::move(g), std::move(g0), true, lo, hi, fn};
  };
  return {
      family("cl-in-a2l-1", "A_{2ℓ-1}", "C_ℓ", 2, kMaxCatalogRank, cl_in_a2l_1),
      family("bl-in-a2l", "A_{2ℓ}", "B_ℓ", 2, kMaxCatalogRank, bl_in_a2l),
      fixed("a1-in-a2", "A_2", "A_1", a1_in_a2),
      family("bl1-in-dl", "D_ℓ", "B_{ℓ-1}", 4, kMaxCatalogRank, bl1_in_dl),
      fixed("f4-in-e6", "E_6", "F_4", f4_in_e6),
      fixed("g2-in-d4", "D_4", "G_2", g2_in_d4),
      fixed("a2-in-g2", "G_2", "A_2", a2_in_g2),
      family("dl-in-bl", "B_ℓ", "D_ℓ", 4, kMaxCatalogRank, dl_in_bl),
      fixed("g2-in-b3", "B_3", "G_2", g2_in_b3),
      fixed("b3-in-d4", "D_4", "B_3", b3_in_d4),
      family("cartan-in-a", "A_ℓ", "h", 1, kMaxCatalogRank,
             [](int l) { return cartan_in("cartan-in-a", {Family::A, l}); }),
      family("cartan-in-d", "D_ℓ", "h", 4, kMaxCatalogRank,
             [](int l) { return cartan_in("cartan-in-d", {Family::D, l}); }),
      family("cartan-in-e", "E_ℓ", "h", 6, 8, [](int l) { return cartan_in("cartan-in-e", {Family::E, l}); }),
      family("gl-in-sp", "C_ℓ", "gl(ℓ)", 2, kMaxCatalogRank, gl_in_sp),
      family("gl-in-sl", "A_ℓ", "gl(ℓ)", 2, kMaxCatalogRank, gl_in_sl),
      family("gl-in-so", "D_ℓ", "gl(ℓ)", 4, kMaxCatalogRank, gl_in_so),
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  fail(ErrorKind::UnknownSpec, "unknown spec '" + name + "'");
}

EmbeddingSpec make_spec(const std::string& name, std::optional<int> rank) {
  const CatalogEntry& e = find_entry(name);
  if (!e.parametric) {
    if (rank) fail(ErrorKind::Usage, "spec '" + name + "' does not take a rank");
    return e.build(0);
  }
  if (!rank) fail(ErrorKind::Usage, "spec '" + name + "' needs a rank");
  if (*rank < e.min_rank || *rank > e.max_rank) {
    fail(ErrorKind::Usage, "rank " + std::to_string(*rank) + " outside the supported range " +
                               std::to_string(e.min_rank) + ".." + std::to_string(e.max_rank) + " of '" +
                               name + "'");
  }
  return e.build(*rank);
}

std::vector<EmbeddingSpec> catalog(int max_rank) {
  std::vector<EmbeddingSpec> out;
  for (const auto& e : catalog_entries()) {
    if (!e.parametric) {
      out.push_back(e.build(0));
      continue;
    }
    for (int l = e.min_rank; l <= std::min(max_rank, e.max_rank); ++l) out.push_back(e.build(l));
  }
  return out;
}

}  // namespace confembed
