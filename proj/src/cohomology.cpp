#include "derham/cohomology.hpp"

#include <stdexcept>

namespace derham {

BlockClasses::BlockClasses(Index cochain_dim, std::vector<Part> parts)
    : cochain_dim_(cochain_dim), parts_(std::move(parts)) {
  std::vector<Integer> orders;
  for (const Part& part : parts_) {
    offsets_.push_back(static_cast<Index>(orders.size()));
    const auto& o = part.section.group().summand_orders();
    orders.insert(orders.end(), o.begin(), o.end());
  }
  group_ = FgAbGroup::from_orders(orders);
}

IntVector BlockClasses::representative(Index generator) const {
  IntVector v = IntVector::Zero(cochain_dim_);
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    const Index local = generator - offsets_[b];
    const IntMatrix& reps = parts_[b].section.representatives();
    if (local < 0 || local >= reps.cols()) continue;
    for (std::size_t k = 0; k < parts_[b].coords.size(); ++k)
      v(parts_[b].coords[k]) = reps(static_cast<Index>(k), local);
  }
  return v;
}

IntMatrix BlockClasses::representatives() const {
  IntMatrix m = IntMatrix::Zero(cochain_dim_, group_.ngens());
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    const IntMatrix& reps = parts_[b].section.representatives();
    for (Index j = 0; j < reps.cols(); ++j)
      for (std::size_t k = 0; k < parts_[b].coords.size(); ++k)
        m(parts_[b].coords[k], offsets_[b] + j) = reps(static_cast<Index>(k), j);
  }
  return m;
}

std::optional<IntVector> BlockClasses::express(const IntVector& z) const {
  if (z.size() != cochain_dim_) throw std::invalid_argument("BlockClasses::express: wrong length");
  IntVector out(group_.ngens());
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    const auto& coords = parts_[b].coords;
    IntVector local(static_cast<Index>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) local(static_cast<Index>(k)) = z(coords[k]);
    auto c = parts_[b].section.express(local);
    if (!c) return std::nullopt;
    out.segment(offsets_[b], c->size()) = *c;
  }
  return out;
}

FgAbGroup CohomologyResult::group_or_zero(int i) const {
  if (i < 0 || i >= static_cast<int>(degrees.size())) return FgAbGroup();
  return group(i);
}

CohomologyResult integral_cohomology(int r, int n) {
  if (r < 0 || n < 0) throw std::invalid_argument("integral_cohomology: r and n must be nonnegative");
  const auto blocks = multidegree_blocks(r, n);
  CohomologyResult res{r, n, {}};
  for (int i = 0; i <= r; ++i) {
    std::vector<BlockClasses::Part> parts;
    for (const MultidegreeBlock& b : blocks) {
      const auto& idx = b.indices[static_cast<std::size_t>(i)];
      if (idx.empty()) continue;
      // Trivial summands stay: express() relies on them to reject non-cocycles.
      parts.push_back({idx, homology_at(b.d_in(i), b.d_out(i))});
    }
    res.degrees.emplace_back(piece_dim(r, n, i), std::move(parts));
  }
  return res;
}

ModpBlockClasses::ModpBlockClasses(Index cochain_dim, std::vector<Part> parts, Prime p)
    : p_(p), cochain_dim_(cochain_dim), parts_(std::move(parts)) {
  for (const Part& part : parts_) {
    offsets_.push_back(dim_);
    dim_ += part.homology.dim();
  }
}

Index ModpBlockClasses::cycle_dim() const {
  Index c = 0;
  for (const Part& part : parts_) c += part.homology.cycle_dim();
  return c;
}

Index ModpBlockClasses::boundary_dim() const {
  Index c = 0;
  for (const Part& part : parts_) c += part.homology.boundary_dim();
  return c;
}

ModMatrix ModpBlockClasses::representatives() const {
  ModMatrix m = ModMatrix::Zero(cochain_dim_, dim_);
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    const ModMatrix& lifts = parts_[b].homology.lifts();
    for (Index j = 0; j < lifts.cols(); ++j)
      for (std::size_t k = 0; k < parts_[b].coords.size(); ++k)
        m(parts_[b].coords[k], offsets_[b] + j) = lifts(static_cast<Index>(k), j);
  }
  return m;
}

std::optional<ModVector> ModpBlockClasses::express(const ModVector& z) const {
  if (z.size() != cochain_dim_) throw std::invalid_argument("ModpBlockClasses::express: wrong length");
  ModVector out(dim_);
  for (std::size_t b = 0; b < parts_.size(); ++b) {
    const auto& coords = parts_[b].coords;
    ModVector local(static_cast<Index>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) local(static_cast<Index>(k)) = z(coords[k]);
    auto c = parts_[b].homology.express(local);
    if (!c) return std::nullopt;
    out.segment(offsets_[b], c->size()) = *c;
  }
  return out;
}

FgAbGroup ModpBlockClasses::group() const {
  return FgAbGroup::from_orders(std::vector<Integer>(static_cast<std::size_t>(dim_), Integer(p_)));
}

Index ModpCohomologyResult::dim(int i) const {
  if (i < 0 || i >= static_cast<int>(degrees.size())) return 0;
  return at(i).dim();
}

ModpCohomologyResult modp_cohomology(int r, int n, Prime p) {
  require_small_prime(p);
  if (r < 0 || n < 0) throw std::invalid_argument("modp_cohomology: r and n must be nonnegative");
  const auto blocks = multidegree_blocks(r, n);
  ModpCohomologyResult res{r, n, p, {}};
  for (int i = 0; i <= r; ++i) {
    std::vector<ModpBlockClasses::Part> parts;
    for (const MultidegreeBlock& b : blocks) {
      const auto& idx = b.indices[static_cast<std::size_t>(i)];
      if (idx.empty()) continue;
      parts.push_back({idx, ModpHomology(reduce_mod_p(b.d_in(i), p), reduce_mod_p(b.d_out(i), p), p)});
    }
    res.degrees.emplace_back(piece_dim(r, n, i), std::move(parts), p);
  }
  return res;
}

Index cocycle_dim(int r, int n, int i, Prime p) {
  require_small_prime(p);
  const Index dim = piece_dim(r, n, i);
  if (dim == 0) return 0;
  return dim - rank_mod_p(reduce_mod_p(d_matrix(r, n, i), p), p);
}

ModMatrix cartier_matrix(int r, int n, int i, Prime p, const ModpCohomologyResult& target) {
  if (target.r != r || target.n != static_cast<int>(p) * n || target.p != p)
    throw std::invalid_argument("cartier_matrix: target is not the mod-p cohomology of Ω_{pn}");
  const ModMatrix rep = cartier_rep_matrix(r, n, i, p);
  const Index src_dim = piece_dim(r, n, i);
  const Index tgt_dim = target.dim(i);
  ModMatrix m(tgt_dim, src_dim);
  if (src_dim == 0 || tgt_dim == 0) return ModMatrix::Zero(tgt_dim, src_dim);
  for (Index c = 0; c < src_dim; ++c) {
    auto coords = target.at(i).express(rep.col(c));
    if (!coords) throw std::logic_error("cartier_matrix: representative is not a mod-p cocycle");
    m.col(c) = *coords;
  }
  return m;
}

Homomorphism cartier_iso(int r, int n, int i, Prime p) {
  require_small_prime(p);
  const Index src_dim = piece_dim(r, n, i);
  const ModpCohomologyResult target = modp_cohomology(r, static_cast<int>(p) * n, p);
  const ModMatrix m = cartier_matrix(r, n, i, p, target);
  if (m.rows() != m.cols() || rank_mod_p(m, p) != src_dim)
    throw std::logic_error("cartier_iso: the Cartier map is not bijective");
  const FgAbGroup src =
      FgAbGroup::from_orders(std::vector<Integer>(static_cast<std::size_t>(src_dim), Integer(p)));
  const FgAbGroup tgt = target.dim(i) == 0 ? FgAbGroup::from_orders({}) : target.at(i).group();
  return Homomorphism(src, tgt, to_int_matrix(m));
}

}  // namespace derham
