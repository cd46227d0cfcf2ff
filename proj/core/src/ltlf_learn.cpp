#include "occlearn/ltlf_learn.hpp"

#include <algorithm>

#include "occlearn/error.hpp"
#include "loop_context.hpp"

namespace occlearn {

std::vector<LtlfOp> default_operator_set() {
  return {LtlfOp::Not,  LtlfOp::Or,    LtlfOp::And,     LtlfOp::Implies,
          LtlfOp::Next, LtlfOp::Until, LtlfOp::Finally, LtlfOp::Globally};
}

LtlfVarLayout::LtlfVarLayout(std::uint32_t m, const Alphabet& sigma,
                             std::vector<LtlfOp> ops)
    : m_(m), sigma_(&sigma), ops_(std::move(ops)) {
  for (LtlfOp op : ops_)
    if (!is_unary(op) && !is_binary(op))
      throw Error("search operators must be unary or binary connectives");
}

// ---------------------------------------------------------------------------
// syntax DAG

LtlfVarLayout encode_syntax(CnfProblem& cnf, std::uint32_t m,
                            const Alphabet& sigma, std::vector<LtlfOp> ops) {
  if (m < 1) throw Error("DAG size must be at least 1");
  LtlfVarLayout layout(m, sigma, std::move(ops));
  const std::size_t nl = layout.num_labels();
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (SymbolId a = 0; a < sigma.size(); ++a)
      layout.x_.push_back(
          cnf.pool().fresh("x_" + std::to_string(i) + "_" + sigma.name(a)));
    for (LtlfOp op : layout.ops_)
      layout.x_.push_back(
          cnf.pool().fresh("x_" + std::to_string(i) + "_" + op_token(op)));
  }
  for (std::uint32_t i = 1; i <= m; ++i) {
    std::vector<Var> labels(layout.x_.begin() + (i - 1) * nl,
                            layout.x_.begin() + i * nl);
    exactly_one(cnf, labels);
  }
  // node 1 has no candidate children, so it must be an atom
  {
    Clause leaf;
    for (SymbolId a = 0; a < sigma.size(); ++a)
      leaf.push_back(static_cast<Lit>(layout.x_atom(1, a)));
    cnf.add_clause(std::move(leaf));
  }
  for (std::uint32_t i = 2; i <= m; ++i) {
    std::vector<Var> lrow, rrow;
    for (std::uint32_t j = 1; j < i; ++j) {
      lrow.push_back(cnf.pool().fresh("l_" + std::to_string(i) + "_" +
                                      std::to_string(j)));
      rrow.push_back(cnf.pool().fresh("r_" + std::to_string(i) + "_" +
                                      std::to_string(j)));
    }
    layout.lr_.push_back(lrow);
    layout.lr_.push_back(rrow);
    exactly_one(cnf, lrow);
    exactly_one(cnf, rrow);
  }
  // no two nodes may encode the same subformula: distinct atoms, and distinct
  // (label, children) for connectives — keeps decoded DAGs deduplicated so
  // size counting and blocking both see canonical structure
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::uint32_t i2 = i + 1; i2 <= m; ++i2) {
      for (SymbolId a = 0; a < sigma.size(); ++a)
        cnf.add_clause({-static_cast<Lit>(layout.x_atom(i, a)),
                        -static_cast<Lit>(layout.x_atom(i2, a))});
      if (i < 2) continue;
      for (std::size_t oi = 0; oi < layout.ops_.size(); ++oi) {
        LtlfOp op = layout.ops_[oi];
        for (std::uint32_t j = 1; j < i; ++j) {
          if (is_unary(op)) {
            cnf.add_clause({-static_cast<Lit>(layout.x_op(i, oi)),
                            -static_cast<Lit>(layout.x_op(i2, oi)),
                            -static_cast<Lit>(layout.l(i, j)),
                            -static_cast<Lit>(layout.l(i2, j))});
          } else {
            for (std::uint32_t k = 1; k < i; ++k)
              cnf.add_clause({-static_cast<Lit>(layout.x_op(i, oi)),
                              -static_cast<Lit>(layout.x_op(i2, oi)),
                              -static_cast<Lit>(layout.l(i, j)),
                              -static_cast<Lit>(layout.l(i2, j)),
                              -static_cast<Lit>(layout.r(i, k)),
                              -static_cast<Lit>(layout.r(i2, k))});
          }
        }
      }
    }
  return layout;
}

// ---------------------------------------------------------------------------
// semantics templates

namespace {

void add_guarded(CnfProblem& cnf, const Clause& cond, Clause tail) {
  Clause c = cond;
  c.insert(c.end(), tail.begin(), tail.end());
  cnf.add_clause(std::move(c));
}

/// Clauses tying node i's valuation to its children over positions 1..len.
/// vi/vj/vk map a position to the node's valuation variable; eps is null for
/// concrete words and yields the padding variable for the symbolic word
/// (valuations are pinned false on padded positions).
void emit_op_semantics(CnfProblem& cnf, const Clause& cond, LtlfOp op,
                       const std::function<Lit(std::size_t)>& vi,
                       const std::function<Lit(std::size_t)>& vj,
                       const std::function<Lit(std::size_t)>& vk,
                       std::size_t len,
                       const std::function<Lit(std::size_t)>& eps) {
  for (std::size_t t = 1; t <= len; ++t) {
    switch (op) {
      case LtlfOp::Not:
        if (eps) add_guarded(cnf, cond, {-vi(t), -eps(t)});
        add_guarded(cnf, cond, {-vi(t), -vj(t)});
        if (eps) add_guarded(cnf, cond, {vi(t), eps(t), vj(t)});
        else add_guarded(cnf, cond, {vi(t), vj(t)});
        break;
      case LtlfOp::Or:
        add_guarded(cnf, cond, {-vi(t), vj(t), vk(t)});
        add_guarded(cnf, cond, {vi(t), -vj(t)});
        add_guarded(cnf, cond, {vi(t), -vk(t)});
        break;
      case LtlfOp::And:
        add_guarded(cnf, cond, {vi(t), -vj(t), -vk(t)});
        add_guarded(cnf, cond, {-vi(t), vj(t)});
        add_guarded(cnf, cond, {-vi(t), vk(t)});
        break;
      case LtlfOp::Implies:
        if (eps) add_guarded(cnf, cond, {-vi(t), -eps(t)});
        add_guarded(cnf, cond, {-vi(t), -vj(t), vk(t)});
        if (eps) {
          add_guarded(cnf, cond, {vi(t), eps(t), vj(t)});
          add_guarded(cnf, cond, {vi(t), eps(t), -vk(t)});
        } else {
          add_guarded(cnf, cond, {vi(t), vj(t)});
          add_guarded(cnf, cond, {vi(t), -vk(t)});
        }
        break;
      case LtlfOp::Next:
        if (t < len) {
          add_guarded(cnf, cond, {-vi(t), vj(t + 1)});
          add_guarded(cnf, cond, {vi(t), -vj(t + 1)});
        } else {
          add_guarded(cnf, cond, {-vi(t)});
        }
        break;
      case LtlfOp::Until:
        if (t < len) {
          add_guarded(cnf, cond, {-vi(t), vk(t), vj(t)});
          add_guarded(cnf, cond, {-vi(t), vk(t), vi(t + 1)});
          add_guarded(cnf, cond, {vi(t), -vk(t)});
          add_guarded(cnf, cond, {vi(t), -vj(t), -vi(t + 1)});
        } else {
          add_guarded(cnf, cond, {-vi(t), vk(t)});
          add_guarded(cnf, cond, {vi(t), -vk(t)});
        }
        break;
      case LtlfOp::Finally:
        if (t < len) {
          add_guarded(cnf, cond, {-vi(t), vj(t), vi(t + 1)});
          add_guarded(cnf, cond, {vi(t), -vj(t)});
          add_guarded(cnf, cond, {vi(t), -vi(t + 1)});
        } else {
          add_guarded(cnf, cond, {-vi(t), vj(t)});
          add_guarded(cnf, cond, {vi(t), -vj(t)});
        }
        break;
      case LtlfOp::Globally:
        if (t < len) {
          add_guarded(cnf, cond, {-vi(t), vj(t)});
          if (eps) {
            // the tail condition ends at the last effective position
            add_guarded(cnf, cond, {-vi(t), vi(t + 1), eps(t + 1)});
            add_guarded(cnf, cond, {vi(t), -vj(t), -vi(t + 1)});
            add_guarded(cnf, cond, {vi(t), -vj(t), -eps(t + 1)});
          } else {
            add_guarded(cnf, cond, {-vi(t), vi(t + 1)});
            add_guarded(cnf, cond, {vi(t), -vj(t), -vi(t + 1)});
          }
        } else {
          add_guarded(cnf, cond, {-vi(t), vj(t)});
          add_guarded(cnf, cond, {vi(t), -vj(t)});
        }
        break;
      default:
        throw Error("unexpected operator in semantic encoding");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// concrete-word semantics

void encode_word_semantics(CnfProblem& cnf, LtlfVarLayout& layout,
                           const Word& w, bool accept) {
  if (w.empty()) throw Error("cannot constrain a formula on the empty word");
  if (layout.y_.count(w)) throw Error("word already encoded");
  const std::uint32_t m = layout.m_;
  const std::size_t len = w.length();
  std::vector<Var>& grid = layout.y_[w];
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::size_t t = 1; t <= len; ++t)
      grid.push_back(cnf.pool().fresh("y_" + std::to_string(i) + "_" +
                                      w.str(*layout.sigma_, "") + "_" +
                                      std::to_string(t)));

  for (std::uint32_t i = 1; i <= m; ++i) {
    for (SymbolId a = 0; a < layout.sigma_->size(); ++a) {
      Lit sel = -static_cast<Lit>(layout.x_atom(i, a));
      for (std::size_t t = 1; t <= len; ++t) {
        Lit yit = static_cast<Lit>(layout.y(w, i, t));
        cnf.add_clause({sel, w.at(t) == a ? yit : -yit});
      }
    }
    if (i < 2) continue;
    for (std::size_t oi = 0; oi < layout.ops_.size(); ++oi) {
      LtlfOp op = layout.ops_[oi];
      for (std::uint32_t j = 1; j < i; ++j) {
        auto vi = [&, i](std::size_t t) {
          return static_cast<Lit>(layout.y(w, i, t));
        };
        auto vj = [&, j](std::size_t t) {
          return static_cast<Lit>(layout.y(w, j, t));
        };
        if (is_unary(op)) {
          Clause cond{-static_cast<Lit>(layout.x_op(i, oi)),
                      -static_cast<Lit>(layout.l(i, j))};
          emit_op_semantics(cnf, cond, op, vi, vj, nullptr, len, nullptr);
        } else {
          for (std::uint32_t k = 1; k < i; ++k) {
            Clause cond{-static_cast<Lit>(layout.x_op(i, oi)),
                        -static_cast<Lit>(layout.l(i, j)),
                        -static_cast<Lit>(layout.r(i, k))};
            auto vk = [&, k](std::size_t t) {
              return static_cast<Lit>(layout.y(w, k, t));
            };
            emit_op_semantics(cnf, cond, op, vi, vj, vk, len, nullptr);
          }
        }
      }
    }
  }
  Lit root = static_cast<Lit>(layout.y(w, m, 1));
  cnf.add_unit(accept ? root : -root);
}

// ---------------------------------------------------------------------------
// symbolic word

void encode_symbolic_word(CnfProblem& cnf, LtlfVarLayout& layout,
                          std::uint32_t k) {
  if (k < 1) throw Error("horizon must be at least 1");
  if (layout.k_ != 0) throw Error("symbolic word already encoded");
  layout.k_ = k;
  for (std::size_t t = 1; t <= k; ++t) {
    for (SymbolId a = 0; a < layout.sigma_->size(); ++a)
      layout.p_.push_back(cnf.pool().fresh(
          "p_" + std::to_string(t) + "_" + layout.sigma_->name(a)));
    layout.p_.push_back(cnf.pool().fresh("p_" + std::to_string(t) + "_eps"));
  }
  for (std::size_t t = 1; t <= k; ++t) {
    std::vector<Var> cell;
    for (SymbolId a = 0; a <= layout.sigma_->size(); ++a)
      cell.push_back(layout.p(t, a));
    exactly_one(cnf, cell);
  }
  for (std::size_t t = 1; t < k; ++t)
    cnf.add_clause({-static_cast<Lit>(layout.p_eps(t)),
                    static_cast<Lit>(layout.p_eps(t + 1))});
}

void encode_separation(CnfProblem& cnf, LtlfVarLayout& layout,
                       const LtlfFormula& phi, std::uint32_t k) {
  if (!(phi.alphabet() == *layout.sigma_))
    throw Error("hypothesis alphabet differs from the search alphabet");
  encode_symbolic_word(cnf, layout, k);
  cnf.add_unit(-static_cast<Lit>(layout.p_eps(1)));  // witness is nonempty
  auto eps = [&](std::size_t t) { return static_cast<Lit>(layout.p_eps(t)); };

  // candidate side: z false at padded positions, semantics conditioned on x/l/r
  const std::uint32_t m = layout.m_;
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::size_t t = 1; t <= k; ++t)
      layout.zc_.push_back(cnf.pool().fresh(
          "zc_" + std::to_string(i) + "_" + std::to_string(t)));
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (SymbolId a = 0; a < layout.sigma_->size(); ++a) {
      Lit sel = -static_cast<Lit>(layout.x_atom(i, a));
      for (std::size_t t = 1; t <= k; ++t) {
        cnf.add_clause({sel, -static_cast<Lit>(layout.z_candidate(i, t)),
                        static_cast<Lit>(layout.p(t, a))});
        cnf.add_clause({sel, static_cast<Lit>(layout.z_candidate(i, t)),
                        -static_cast<Lit>(layout.p(t, a))});
      }
    }
    if (i < 2) continue;
    for (std::size_t oi = 0; oi < layout.ops_.size(); ++oi) {
      LtlfOp op = layout.ops_[oi];
      for (std::uint32_t j = 1; j < i; ++j) {
        auto vi = [&, i](std::size_t t) {
          return static_cast<Lit>(layout.z_candidate(i, t));
        };
        auto vj = [&, j](std::size_t t) {
          return static_cast<Lit>(layout.z_candidate(j, t));
        };
        if (is_unary(op)) {
          Clause cond{-static_cast<Lit>(layout.x_op(i, oi)),
                      -static_cast<Lit>(layout.l(i, j))};
          emit_op_semantics(cnf, cond, op, vi, vj, nullptr, k, eps);
        } else {
          for (std::uint32_t k2 = 1; k2 < i; ++k2) {
            Clause cond{-static_cast<Lit>(layout.x_op(i, oi)),
                        -static_cast<Lit>(layout.l(i, j)),
                        -static_cast<Lit>(layout.r(i, k2))};
            auto vk = [&, k2](std::size_t t) {
              return static_cast<Lit>(layout.z_candidate(k2, t));
            };
            emit_op_semantics(cnf, cond, op, vi, vj, vk, k, eps);
          }
        }
      }
    }
  }

  // fixed-hypothesis side: same templates with the wiring known
  layout.hypothesis_ = phi.canonical_dag();
  const auto& nodes = layout.hypothesis_.nodes;
  for (std::uint32_t i = 1; i <= nodes.size(); ++i)
    for (std::size_t t = 1; t <= k; ++t)
      layout.zh_.push_back(cnf.pool().fresh(
          "zh_" + std::to_string(i) + "_" + std::to_string(t)));
  for (std::uint32_t i = 1; i <= nodes.size(); ++i) {
    const auto& n = nodes[i - 1];
    auto vi = [&, i](std::size_t t) {
      return static_cast<Lit>(layout.z_hypothesis(i, t));
    };
    switch (n.op) {
      case LtlfOp::True:  // holds at every effective position
        for (std::size_t t = 1; t <= k; ++t) {
          cnf.add_clause({-vi(t), -eps(t)});
          cnf.add_clause({vi(t), eps(t)});
        }
        break;
      case LtlfOp::False:
        for (std::size_t t = 1; t <= k; ++t) cnf.add_clause({-vi(t)});
        break;
      case LtlfOp::Atom:
        for (std::size_t t = 1; t <= k; ++t) {
          cnf.add_clause({-vi(t), static_cast<Lit>(layout.p(t, n.atom))});
          cnf.add_clause({vi(t), -static_cast<Lit>(layout.p(t, n.atom))});
        }
        break;
      default: {
        auto vj = [&, n](std::size_t t) {
          return static_cast<Lit>(layout.z_hypothesis(n.left, t));
        };
        std::function<Lit(std::size_t)> vk;
        if (is_binary(n.op))
          vk = [&, n](std::size_t t) {
            return static_cast<Lit>(layout.z_hypothesis(n.right, t));
          };
        emit_op_semantics(cnf, {}, n.op, vi, vj, vk, k, eps);
      }
    }
  }
  cnf.add_unit(static_cast<Lit>(
      layout.z_hypothesis(static_cast<std::uint32_t>(nodes.size()), 1)));
  cnf.add_unit(-static_cast<Lit>(layout.z_candidate(m, 1)));
}

// ---------------------------------------------------------------------------
// blocking

namespace {

void enumerate_embeddings(const CanonicalDag& dag, std::uint32_t m,
                          std::vector<std::uint32_t>& sigma,
                          std::vector<bool>& used, std::size_t next,
                          const std::function<void()>& emit) {
  const std::size_t s = dag.nodes.size();
  if (next == s - 1) {  // nodes 1..s-1 placed; root always maps to m
    emit();
    return;
  }
  for (std::uint32_t target = 1; target < m; ++target) {
    if (used[target]) continue;
    sigma[next] = target;  // pattern node next+1 -> model node target
    bool ok = true;
    const auto& n = dag.nodes[next];
    if (n.left && sigma[n.left - 1] >= target) ok = false;
    if (ok && n.right && sigma[n.right - 1] >= target) ok = false;
    if (ok) {
      used[target] = true;
      enumerate_embeddings(dag, m, sigma, used, next + 1, emit);
      used[target] = false;
    }
  }
  sigma[next] = 0;
}

}  // namespace

void encode_blocking(CnfProblem& cnf, LtlfVarLayout& layout,
                     const std::vector<CanonicalDag>& d) {
  const std::uint32_t m = layout.m();
  const auto& search_ops = layout.operators();
  for (const CanonicalDag& dag : d) {
    const std::size_t s = dag.nodes.size();
    if (s == 0 || s > m) continue;
    // label feasibility: patterns using operators outside the search set
    // cannot be decoded, so nothing to block
    std::vector<std::size_t> op_index(s, 0);
    bool expressible = true;
    for (std::size_t i = 0; i < s && expressible; ++i) {
      const auto& n = dag.nodes[i];
      if (n.op == LtlfOp::Atom) continue;
      auto it = std::find(search_ops.begin(), search_ops.end(), n.op);
      if (it == search_ops.end()) expressible = false;
      else op_index[i] = static_cast<std::size_t>(it - search_ops.begin());
    }
    if (!expressible) continue;

    std::vector<std::uint32_t> sigma(s, 0);
    sigma[s - 1] = m;  // root
    if (s == 1) {
      const auto& n = dag.nodes[0];
      if (n.op == LtlfOp::Atom)
        cnf.add_unit(-static_cast<Lit>(layout.x_atom(m, n.atom)));
      continue;
    }
    std::vector<bool> used(m + 1, false);
    used[m] = true;
    // root children must respect the child-below-parent wiring trivially
    enumerate_embeddings(dag, m, sigma, used, 0, [&] {
      Clause c;
      for (std::size_t i = 0; i < s; ++i) {
        const auto& n = dag.nodes[i];
        std::uint32_t at = sigma[i];
        if (n.op == LtlfOp::Atom) {
          c.push_back(-static_cast<Lit>(layout.x_atom(at, n.atom)));
          continue;
        }
        c.push_back(-static_cast<Lit>(layout.x_op(at, op_index[i])));
        c.push_back(-static_cast<Lit>(layout.l(at, sigma[n.left - 1])));
        if (is_binary(n.op))
          c.push_back(-static_cast<Lit>(layout.r(at, sigma[n.right - 1])));
      }
      cnf.add_clause(std::move(c));
    });
  }
}

// ---------------------------------------------------------------------------
// decoding

LtlfFormula LtlfVarLayout::decode(const Model& model) const {
  auto factory = std::make_shared<FormulaFactory>(*sigma_);
  std::vector<NodeId> built(m_ + 1, kNoNode);
  // children have smaller ids, so one ascending pass suffices
  for (std::uint32_t i = 1; i <= m_; ++i) {
    std::optional<SymbolId> atom;
    std::optional<LtlfOp> op;
    for (SymbolId a = 0; a < sigma_->size(); ++a)
      if (model.value(x_atom(i, a))) atom = a;
    for (std::size_t oi = 0; oi < ops_.size(); ++oi)
      if (model.value(x_op(i, oi))) op = ops_[oi];
    if (atom) {
      built[i] = factory->atom(*atom);
      continue;
    }
    if (!op || i < 2) throw Error("model decodes to no label");
    std::uint32_t lj = 0, rk = 0;
    for (std::uint32_t j = 1; j < i; ++j) {
      if (model.value(l(i, j))) lj = j;
      if (model.value(r(i, j))) rk = j;
    }
    if (lj == 0 || built[lj] == kNoNode) throw Error("model wires no child");
    if (is_unary(*op)) {
      built[i] = factory->mk_unary(*op, built[lj]);
    } else {
      if (rk == 0 || built[rk] == kNoNode) throw Error("model wires no child");
      built[i] = factory->mk_binary(*op, built[lj], built[rk]);
    }
  }
  return LtlfFormula(factory, built[m_]);
}

Word LtlfVarLayout::decode_witness(const Model& model) const {
  if (k_ == 0) throw Error("no symbolic word in this encoding");
  std::vector<SymbolId> syms;
  for (std::size_t t = 1; t <= k_; ++t) {
    if (model.value(p_eps(t))) break;
    SymbolId found = sigma_->size();
    for (SymbolId a = 0; a < sigma_->size(); ++a)
      if (model.value(p(t, a))) found = a;
    if (found == sigma_->size()) throw Error("symbolic position has no symbol");
    syms.push_back(found);
  }
  return Word(std::move(syms));
}

// ---------------------------------------------------------------------------
// drivers

namespace {

using detail::Clock;
using detail::LoopContext;

LtlfFormula truth_formula(const Alphabet& sigma) {
  auto factory = std::make_shared<FormulaFactory>(sigma);
  NodeId root = factory->truth(true);
  return LtlfFormula(factory, root);
}

void check_sample(const Sample& s) {
  if (s.contains_empty_word())
    throw Error("LTLf learning requires nonempty sample words");
}

void audit_candidate(const LtlfVarLayout& layout, const Model& model,
                     const LtlfFormula& candidate, const std::set<Word>& pos,
                     const std::set<Word>& neg) {
  for (const Word& w : pos) {
    if (!satisfies(w, candidate))
      throw Error("audit: required positive not satisfied");
    if (!model.value(layout.y(w, layout.m(), 1)))
      throw Error("audit: root valuation disagrees with the asserted polarity");
  }
  for (const Word& w : neg) {
    if (satisfies(w, candidate))
      throw Error("audit: required negative satisfied");
    if (model.value(layout.y(w, layout.m(), 1)))
      throw Error("audit: root valuation disagrees with the asserted polarity");
  }
}

}  // namespace

LtlfLearnResult learn_ssym_ltlf(const Sample& s, const LearnConfig& cfg,
                                HorizonConfig horizon,
                                std::vector<LtlfOp> ops) {
  if (cfg.size_bound < 1) throw Error("size bound must be at least 1");
  if (horizon.k < 1) throw Error("horizon must be at least 1");
  check_sample(s);
  LoopContext ctx(cfg);
  LtlfFormula best = truth_formula(s.alphabet);
  bool have_hypothesis = false;  // best is still the trivial seed
  std::set<Word> pos, neg;
  std::uint32_t m = 1;

  // Main-loop iterations are size bumps and hypothesis-comparison rounds;
  // solves that only extend the covered-positives set are service steps of
  // the incremental-coverage heuristic and count as solver calls only.
  std::optional<Clock::time_point> round_start;
  auto finish_round = [&] {
    ++ctx.stats.iterations;
    ctx.stats.iteration_seconds.push_back(
        std::chrono::duration<double>(Clock::now() - *round_start).count());
    round_start.reset();
  };

  while (m <= cfg.size_bound) {
    if (ctx.stats.solver_calls >= cfg.max_iterations)
      throw Error("iteration cap exceeded; learner is not converging");
    if (ctx.out_of_time()) {
      ctx.stats.reason = TerminationReason::Timeout;
      ctx.stats.final_size = static_cast<std::uint32_t>(best.size());
      return {best, ctx.stats};
    }
    if (!round_start) round_start = Clock::now();

    CnfProblem cnf;
    LtlfVarLayout layout = encode_syntax(cnf, m, s.alphabet, ops);
    for (const Word& w : pos) encode_word_semantics(cnf, layout, w, true);
    for (const Word& w : neg) encode_word_semantics(cnf, layout, w, false);
    if (have_hypothesis) encode_separation(cnf, layout, best, horizon.k);

    SolveResult res = solve(cnf, ctx.solver_config());
    ++ctx.stats.solver_calls;
    if (res.timed_out()) {
      ctx.stats.reason = TerminationReason::Timeout;
      ctx.stats.final_size = static_cast<std::uint32_t>(best.size());
      return {best, ctx.stats};
    }
    if (res.unsat()) {
      ++m;
      finish_round();
      continue;
    }

    LtlfFormula candidate = layout.decode(*res.model);
    if (cfg.debug) audit_candidate(layout, *res.model, candidate, pos, neg);
    ctx.dump(cnf, emit_dot(candidate));

    auto missed = shortest_not_covered(
        s.positives, [&](const Word& w) { return satisfies(w, candidate); });
    if (missed) {
      pos.insert(*missed);
      ++ctx.stats.counterexamples;
      continue;
    }
    if (!have_hypothesis) {
      best = candidate;
      have_hypothesis = true;
    } else {
      Word u = layout.decode_witness(*res.model);
      if (cfg.debug &&
          (!satisfies(u, best) || satisfies(u, candidate)))
        throw Error("audit: symbolic witness fails the separation contract");
      if (implies(candidate, best)) {
        // strictly below (u separates); remember u so the old language
        // cannot come back
        neg.insert(u);
        ++ctx.stats.counterexamples;
        best = candidate;
      } else {
        neg.insert(*witness(candidate, best));
        ++ctx.stats.counterexamples;
      }
    }
    finish_round();
  }

  ctx.stats.reason = TerminationReason::Minimal;
  ctx.stats.final_size = static_cast<std::uint32_t>(best.size());
  return {best, ctx.stats};
}

LtlfLearnResult learn_ceg_ltlf(const Sample& s, const LearnConfig& cfg,
                               std::vector<LtlfOp> ops) {
  if (cfg.size_bound < 1) throw Error("size bound must be at least 1");
  check_sample(s);
  LoopContext ctx(cfg);
  LtlfFormula best = truth_formula(s.alphabet);
  bool have_hypothesis = false;
  std::set<Word> pos, neg;
  std::vector<CanonicalDag> discarded;
  std::uint32_t m = 1;

  // Same main-loop iteration accounting as learn_ssym_ltlf above.
  std::optional<Clock::time_point> round_start;
  auto finish_round = [&] {
    ++ctx.stats.iterations;
    ctx.stats.iteration_seconds.push_back(
        std::chrono::duration<double>(Clock::now() - *round_start).count());
    round_start.reset();
  };

  while (m <= cfg.size_bound) {
    if (ctx.stats.solver_calls >= cfg.max_iterations)
      throw Error("iteration cap exceeded; learner is not converging");
    if (ctx.out_of_time()) {
      ctx.stats.reason = TerminationReason::Timeout;
      ctx.stats.final_size = static_cast<std::uint32_t>(best.size());
      return {best, ctx.stats};
    }
    if (!round_start) round_start = Clock::now();

    CnfProblem cnf;
    LtlfVarLayout layout = encode_syntax(cnf, m, s.alphabet, ops);
    for (const Word& w : pos) encode_word_semantics(cnf, layout, w, true);
    for (const Word& w : neg) encode_word_semantics(cnf, layout, w, false);
    encode_blocking(cnf, layout, discarded);

    SolveResult res = solve(cnf, ctx.solver_config());
    ++ctx.stats.solver_calls;
    if (res.timed_out()) {
      ctx.stats.reason = TerminationReason::Timeout;
      ctx.stats.final_size = static_cast<std::uint32_t>(best.size());
      return {best, ctx.stats};
    }
    if (res.unsat()) {
      ++m;
      finish_round();
      continue;
    }

    LtlfFormula candidate = layout.decode(*res.model);
    if (cfg.debug) audit_candidate(layout, *res.model, candidate, pos, neg);
    ctx.dump(cnf, emit_dot(candidate));

    auto missed = shortest_not_covered(
        s.positives, [&](const Word& w) { return satisfies(w, candidate); });
    if (missed) {
      pos.insert(*missed);
      ++ctx.stats.counterexamples;
      continue;
    }
    if (!have_hypothesis) {
      best = candidate;
      have_hypothesis = true;
    } else if (equivalent(candidate, best)) {
      discarded.push_back(candidate.canonical_dag());
    } else if (implies(candidate, best)) {
      neg.insert(*witness(best, candidate));
      ++ctx.stats.counterexamples;
      best = candidate;
    } else {
      neg.insert(*witness(candidate, best));
      ++ctx.stats.counterexamples;
    }
    finish_round();
  }

  ctx.stats.reason = TerminationReason::Minimal;
  ctx.stats.final_size = static_cast<std::uint32_t>(best.size());
  return {best, ctx.stats};
}

}  // namespace occlearn
