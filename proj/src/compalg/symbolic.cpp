#include "symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "entwine/errors.hpp"

namespace entwine::compalg::detail {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

bool mono_less(const Mono& x, const Mono& y) { return x < y; }

// Disjoint union of two monomials; the expressions we build never repeat a variable.
Mono merge(const Mono& x, const Mono& y) {
  Mono r = x;
  for (int k = 0; k < kMaxVars; ++k) {
    if (y[k] < 0) continue;
    if (r[k] >= 0) throw InternalConsistencyError("symbolic expression uses a variable twice");
    r[k] = y[k];
  }
  return r;
}

}  // namespace

void canonicalize(SymVec& v) {
  std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) {
    if (x.out != y.out) return x.out < y.out;
    return mono_less(x.mono, y.mono);
  });
  SymVec r;
  r.reserve(v.size());
  for (auto& t : v) {
    if (!r.empty() && r.back().out == t.out && r.back().mono == t.mono) {
      r.back().coeff += t.coeff;
      if (r.back().coeff.is_zero()) r.pop_back();
    } else if (!t.coeff.is_zero()) {
      r.push_back(std::move(t));
    }
  }
  v = std::move(r);
}

Evaluator::Evaluator(const CompContext& ctx)
    : ctx_(ctx), da_(ctx.entwining().dim_a()), dc_(ctx.entwining().dim_c()) {}

std::size_t Evaluator::num_inputs(int node) const {
  return ctx_.side() == Side::Algebra ? dc_ * ipow(da_, nodes_.at(node).degree) : dc_;
}

int Evaluator::leaf(const Cochain& c) {
  if (c.side != ctx_.side()) throw PreconditionError("leaf cochain on the wrong side");
  Node n{Kind::Leaf, c.degree};
  n.leaf = static_cast<int>(leaf_cols_.size());
  leaf_cols_.push_back(c.map.matrix().columns());
  leaf_in_.push_back(c.map.domain_dim());
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int Evaluator::var(int v, std::size_t degree) {
  if (v < 0 || v >= kMaxVars) throw PreconditionError("variable index out of range");
  Node n{Kind::Var, degree};
  n.var = v;
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int Evaluator::comp(int a, std::size_t i, int b) {
  if (a < 0 || b < 0) return -1;
  const std::size_t m = degree(a), n = degree(b);
  if (m + n == 0) return -1;
  Node node{Kind::Comp, m + n - 1};
  node.a = a;
  node.b = b;
  node.i = i;
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int Evaluator::sum(const std::vector<std::pair<Scalar, int>>& terms) {
  Node node{Kind::Sum, 0};
  bool first = true;
  for (const auto& [s, t] : terms) {
    if (t < 0) continue;  // the degree -1 space is zero
    if (first) node.degree = degree(t);
    else if (degree(t) != node.degree) throw InternalConsistencyError("symbolic sum mixes degrees");
    first = false;
    node.terms.emplace_back(s, t);
  }
  if (first) return -1;
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int Evaluator::difference(int a, int b) {
  const FieldSpec& f = ctx_.field();
  return sum({{Scalar::one(f), a}, {Scalar(f, -1), b}});
}

const std::vector<exactla::SparseRow>& Evaluator::action_columns(std::size_t i) {
  while (act_cols_.size() <= i) act_cols_.push_back(ctx_.entwining().right_action(act_cols_.size()).matrix().columns());
  return act_cols_[i];
}

const std::vector<exactla::SparseRow>& Evaluator::coaction_columns(std::size_t i) {
  while (coact_cols_.size() <= i)
    coact_cols_.push_back(ctx_.entwining().right_coaction(coact_cols_.size()).matrix().columns());
  return coact_cols_[i];
}

const SymVec& Evaluator::eval(int node, std::size_t input) {
  if (memo_.size() < nodes_.size()) {
    memo_.resize(nodes_.size());
    done_.resize(nodes_.size());
  }
  if (memo_[node].empty()) {
    memo_[node].resize(num_inputs(node));
    done_[node].assign(num_inputs(node), 0);
  }
  if (!done_[node][input]) {
    SymVec v = compute(node, input);
    memo_[node][input] = std::move(v);
    done_[node][input] = 1;
  }
  return memo_[node][input];
}

SymVec Evaluator::compute(int id, std::size_t input) {
  const Node& n = nodes_[id];
  SymVec r;
  switch (n.kind) {
    case Kind::Leaf:
      for (const auto& e : leaf_cols_[n.leaf][input]) r.push_back({e.col, Mono{-1, -1, -1}, e.value});
      break;
    case Kind::Var: {
      const std::size_t outs = ctx_.side() == Side::Algebra ? da_ : da_ * ipow(dc_, n.degree);
      const std::size_t ins = num_inputs(id);
      for (std::size_t o = 0; o < outs; ++o) {
        Mono mono{-1, -1, -1};
        mono[n.var] = static_cast<std::int32_t>(o * ins + input);
        r.push_back({static_cast<std::uint32_t>(o), mono, Scalar::one(ctx_.field())});
      }
      break;
    }
    case Kind::Sum:
      for (const auto& [s, t] : n.terms) {
        // copy first: eval may grow memo_ and move the vectors we are reading
        SymVec part = eval(t, input);
        for (auto& term : part) {
          term.coeff *= s;
          r.push_back(std::move(term));
        }
      }
      canonicalize(r);
      break;
    case Kind::Comp: {
      const Node copy = n;
      r = ctx_.side() == Side::Algebra ? comp_algebra(copy, input) : comp_coalgebra(copy, input);
      canonicalize(r);
      break;
    }
  }
  return r;
}

// f◇ᵢg on (c, a¹..a^{m+n-1}): ρⁱ_R on (c, a¹..aⁱ), g on (c'', a^{i+1}..a^{i+n}),
// then f on (c', a'¹..a'ⁱ, g(..), a^{i+n+1}..).
SymVec Evaluator::comp_algebra(const Node& n, std::size_t input) {
  const std::size_t m = degree(n.a), deg = n.degree, i = n.i;
  if (i >= m) return {};
  const std::size_t gn = degree(n.b);
  const std::size_t rest = input % ipow(da_, deg), c = input / ipow(da_, deg);
  const std::size_t head = rest / ipow(da_, deg - i);
  const std::size_t mid = (rest / ipow(da_, m - i - 1)) % ipow(da_, gn);
  const std::size_t tail = rest % ipow(da_, m - i - 1);
  const auto& col = coaction_columns(i)[c * ipow(da_, i) + head];
  SymVec r;
  for (const auto& re : col) {
    const std::size_t lhead = re.col / dc_, c2 = re.col % dc_;
    SymVec gv = eval(n.b, c2 * ipow(da_, gn) + mid);
    for (const auto& gt : gv) {
      const std::size_t fin = (lhead * da_ + gt.out) * ipow(da_, m - i - 1) + tail;
      const SymVec& fv = eval(n.a, fin);
      for (const auto& ft : fv) {
        Scalar k = re.value;
        k *= gt.coeff;
        k *= ft.coeff;
        r.push_back({ft.out, merge(ft.mono, gt.mono), std::move(k)});
      }
    }
  }
  return r;
}

// f◇ᵢg on c: f(c) = (a, c¹..cᵐ), g on c^{i+1} giving (a', d), then ρ_i^R on (a, c¹..cⁱ, a').
SymVec Evaluator::comp_coalgebra(const Node& n, std::size_t input) {
  const std::size_t m = degree(n.a), gn = degree(n.b), i = n.i;
  if (i >= m) return {};
  const std::size_t cm = ipow(dc_, m), ctail = ipow(dc_, m - i - 1), cn = ipow(dc_, gn);
  const auto& act = action_columns(i);
  SymVec fv = eval(n.a, input);
  SymVec r;
  for (const auto& ft : fv) {
    const std::size_t a = ft.out / cm, cs = ft.out % cm;
    const std::size_t head = cs / (ctail * dc_), ci = (cs / ctail) % dc_, tail = cs % ctail;
    const SymVec& gv = eval(n.b, ci);
    for (const auto& gt : gv) {
      const std::size_t a2 = gt.out / cn, d = gt.out % cn;
      for (const auto& re : act[(a * ipow(dc_, i) + head) * da_ + a2]) {
        Scalar k = re.value;
        k *= gt.coeff;
        k *= ft.coeff;
        const std::size_t out = (re.col * cn + d) * ctail + tail;
        r.push_back({static_cast<std::uint32_t>(out), merge(ft.mono, gt.mono), std::move(k)});
      }
    }
  }
  return r;
}

CheckResult Evaluator::check_zero(int node, const std::string& name, const std::vector<std::string>& var_names) {
  CheckResult res;
  res.name = name;
  if (node < 0) return res;
  for (std::size_t x = 0; x < num_inputs(node); ++x) {
    const SymVec& v = eval(node, x);
    if (v.empty()) continue;
    const Term& t = v.front();
    std::ostringstream w;
    w << "input " << x << ", output " << t.out;
    for (int k = 0; k < kMaxVars; ++k)
      if (t.mono[k] >= 0) w << ", " << (k < static_cast<int>(var_names.size()) ? var_names[k] : "x") << "=e" << t.mono[k];
    w << ": residual " << t.coeff.to_string();
    res.ok = false;
    res.witness = w.str();
    return res;
  }
  return res;
}

}  // namespace entwine::compalg::detail
