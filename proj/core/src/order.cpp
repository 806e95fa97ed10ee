#include "graphideal/order.hpp"

#include <algorithm>
#include <string>

#include "graphideal/errors.hpp"

namespace graphideal {

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::vector<VarIndex>> blocks)
    : kind_(kind), blocks_(std::move(blocks)) {
  VarIndex max_var = -1;
  for (const auto& block : blocks_)
    for (VarIndex v : block) {
      if (v < 0) throw ValidationError("negative variable index in order");
      max_var = std::max(max_var, v);
    }
  block_of_.assign(max_var + 1, -1);
  rank_of_.assign(max_var + 1, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t r = 0; r < blocks_[b].size(); ++r) {
      VarIndex v = blocks_[b][r];
      if (block_of_[v] != -1)
        throw ValidationError("variable index " + std::to_string(v) +
                              " listed twice in order");
      block_of_[v] = static_cast<int>(b);
      rank_of_[v] = static_cast<int>(r);
    }
}

MonomialOrder MonomialOrder::grevlex(std::vector<VarIndex> precedence) {
  return MonomialOrder(Kind::grevlex, {std::move(precedence)});
}

MonomialOrder MonomialOrder::lex(std::vector<VarIndex> precedence) {
  return MonomialOrder(Kind::lex, {std::move(precedence)});
}

MonomialOrder MonomialOrder::block_elimination(std::vector<VarIndex> front,
                                               std::vector<VarIndex> back) {
  return MonomialOrder(Kind::block_elimination,
                       {std::move(front), std::move(back)});
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  // One merged pass over both sparse supports collects, per block, the degree
  // sums and the extreme-rank variable where the exponents differ.
  struct BlockState {
    int deg_a = 0, deg_b = 0;
    int tie_rank = -1;  // least significant differing variable for grevlex
    int tie_sign = 0;
  };
  BlockState state[2];
  int lex_rank = -1, lex_sign = 0;  // most significant differing variable

  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin(), ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    VarIndex v;
    int ea = 0, eb = 0;
    if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) {
      v = ia->first;
      ea = (ia++)->second;
    } else if (ia == fa.end() || ib->first < ia->first) {
      v = ib->first;
      eb = (ib++)->second;
    } else {
      v = ia->first;
      ea = (ia++)->second;
      eb = (ib++)->second;
    }
    if (v >= static_cast<VarIndex>(block_of_.size()) || block_of_[v] < 0)
      throw PreconditionError("variable index " + std::to_string(v) +
                              " outside the monomial order");
    BlockState& s = state[block_of_[v]];
    s.deg_a += ea;
    s.deg_b += eb;
    if (ea != eb) {
      int r = rank_of_[v];
      if (r > s.tie_rank) {
        s.tie_rank = r;
        s.tie_sign = ea < eb ? 1 : -1;  // smaller exponent wins in grevlex
      }
      if (lex_rank < 0 || r < lex_rank) {
        lex_rank = r;
        lex_sign = ea > eb ? 1 : -1;  // larger exponent wins in lex
      }
    }
  }

  if (kind_ == Kind::lex) return lex_sign;
  for (const BlockState& s : state) {
    if (s.deg_a != s.deg_b) return s.deg_a > s.deg_b ? 1 : -1;
    if (s.tie_sign != 0) return s.tie_sign;
  }
  return 0;
}

}  // namespace graphideal
