#include "abcg/monomial_eq.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace abcg {

std::string MonomialSolveResult::str() const {
  switch (verdict) {
    case Verdict::Found:
      return "FOUND z=" + std::to_string(z);
    case Verdict::Empty:
      if (certificate == Certificate::Period)
        return "EMPTY period=" + std::to_string(period);
      return "EMPTY probe=" + std::to_string(probe.first) + ":" +
             std::to_string(probe.second);
    default:
      return "UNKNOWN bound=" + std::to_string(bound_used);
  }
}

std::optional<std::int64_t> detect_period(const ModulePresentation& a_mod,
                                          const LaurentVec& f1,
                                          std::int64_t bound) {
  const std::int64_t d = a_mod.base_step();
  LaurentVec shifted = f1;
  for (std::int64_t p = 1; p <= bound; ++p) {
    shifted = shifted.shifted(d);
    if (a_mod.elem_equal(shifted, f1)) return p;
  }
  return std::nullopt;
}

namespace {

// Dense vectors over Z/q indexed by (position, exponent mod r).
struct FqSpace {
  int q, r, rank;
  int dim() const { return r * rank; }

  std::vector<int> to_vec(const LaurentVec& v) const {
    std::vector<int> out(dim(), 0);
    for (int i = 0; i < rank; ++i)
      for (const auto& [e, c] : v[i].terms()) {
        const int em = static_cast<int>(((e % r) + r) % r);
        const int cm = static_cast<int>(((c % q) + q) % q);
        out[i * r + em] = (out[i * r + em] + cm) % q;
      }
    return out;
  }

  // multiplication by the ring variable: cyclic exponent shift
  std::vector<int> shift(const std::vector<int>& v) const {
    std::vector<int> out(dim(), 0);
    for (int i = 0; i < rank; ++i)
      for (int e = 0; e < r; ++e) out[i * r + (e + 1) % r] = v[i * r + e];
    return out;
  }
};

struct FqBasis {
  int q;
  // reduced rows with their pivot columns, pivot normalized to 1
  std::vector<std::pair<int, std::vector<int>>> rows;

  static int inv_mod(int a, int q) {
    int t = 1;
    for (int i = 0; i < q - 2; ++i) t = t * a % q;  // q prime, a != 0
    return t;
  }

  void reduce(std::vector<int>& v) const {
    for (const auto& [pc, row] : rows) {
      if (v[pc] == 0) continue;
      const int f = v[pc];
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = ((v[j] - f * row[j]) % q + q) % q;
    }
  }

  void insert(std::vector<int> v) {
    reduce(v);
    int pc = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        pc = static_cast<int>(j);
        break;
      }
    if (pc < 0) return;
    const int inv = inv_mod(v[pc], q);
    for (auto& x : v) x = x * inv % q;
    for (auto& [opc, row] : rows) {
      if (row[pc] == 0) continue;
      const int f = row[pc];
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = ((row[j] - f * v[j]) % q + q) % q;
    }
    rows.emplace_back(pc, std::move(v));
  }
};

bool is_prime(int q) {
  if (q < 2) return false;
  for (int i = 2; i * i <= q; ++i)
    if (q % i == 0) return false;
  return true;
}

}  // namespace

ProbeOutcome finite_probe(const ModulePresentation& a_mod, const LaurentVec& f1,
                          const LaurentVec& f0, int q, int r) {
  if (!is_prime(q)) throw std::invalid_argument("probe modulus must be prime");
  if (r < 1) throw std::invalid_argument("probe exponent order must be >= 1");
  FqSpace space{q, r, a_mod.ambient_rank()};
  FqBasis rel{q, {}};
  for (const auto& rvec : a_mod.relations()) {
    std::vector<int> base = space.to_vec(a_mod.to_engine(rvec));
    for (int s = 0; s < r; ++s) {
      rel.insert(base);
      base = space.shift(base);
    }
  }
  auto canon = [&](std::vector<int> v) {
    rel.reduce(v);
    return v;
  };
  const std::vector<int> start = space.to_vec(a_mod.to_engine(f1));
  const std::vector<int> target = canon(space.to_vec(a_mod.to_engine(f0)));
  const std::vector<int> start_c = canon(start);

  ProbeOutcome out;
  std::vector<int> cur = start;
  std::int64_t tau = r;
  for (int t = 1; t <= r; ++t) {
    cur = space.shift(cur);
    if (canon(cur) == start_c) {
      tau = t;
      break;
    }
  }
  out.period = tau;
  cur = start;
  for (std::int64_t s = 0; s < tau; ++s) {
    if (canon(cur) == target) out.residues.push_back(s);
    cur = space.shift(cur);
  }
  return out;
}

MonomialSolveResult solve_monomial(const ModulePresentation& a_mod,
                                   const LaurentVec& f1, const LaurentVec& f0,
                                   const SolveConfig& cfg) {
  const std::int64_t d = a_mod.base_step();
  const std::int64_t bound = cfg.search_bound;
  MonomialSolveResult res;
  res.bound_used = bound;

  auto found = [&](std::int64_t z) {
    res.verdict = MonomialSolveResult::Verdict::Found;
    res.z = z;
    assert(a_mod.elem_equal(f1.shifted(z * d), f0));
    return res;
  };

  if (a_mod.elem_equal(f1, f0)) return found(0);

  if (auto p = detect_period(a_mod, f1, bound)) {
    LaurentVec cur = f1;
    for (std::int64_t z = 1; z < *p; ++z) {
      cur = cur.shifted(d);
      if (a_mod.elem_equal(cur, f0)) return found(z);
    }
    res.verdict = MonomialSolveResult::Verdict::Empty;
    res.certificate = MonomialSolveResult::Certificate::Period;
    res.period = *p;
    return res;
  }

  LaurentVec up = f1, down = f1;
  for (std::int64_t z = 1; z <= bound; ++z) {
    up = up.shifted(d);
    if (a_mod.elem_equal(up, f0)) return found(z);
    down = down.shifted(-d);
    if (a_mod.elem_equal(down, f0)) return found(-z);
  }

  // Probes: each constrains z to residue classes in its own period; an empty
  // (joint) residue set certifies unsolvability.
  std::int64_t joint_mod = 1;
  std::vector<std::int64_t> joint = {0};  // residues mod joint_mod
  for (const auto& [q, r] : cfg.probes) {
    ProbeOutcome po = finite_probe(a_mod, f1, f0, q, r);
    res.probe = {q, r};
    if (po.residues.empty()) {
      res.verdict = MonomialSolveResult::Verdict::Empty;
      res.certificate = MonomialSolveResult::Certificate::Probe;
      return res;
    }
    const std::int64_t m = std::lcm(joint_mod, po.period);
    std::vector<std::int64_t> next;
    for (std::int64_t base : joint)
      for (std::int64_t t = base; t < m; t += joint_mod)
        if (std::find(po.residues.begin(), po.residues.end(), t % po.period) !=
            po.residues.end())
          next.push_back(t);
    std::sort(next.begin(), next.end());
    joint_mod = m;
    joint = std::move(next);
    if (joint.empty()) {
      res.verdict = MonomialSolveResult::Verdict::Empty;
      res.certificate = MonomialSolveResult::Certificate::Probe;
      return res;
    }
  }
  // Representatives of the joint residue classes inside the search window
  // were already covered by the bounded search above.
  res.verdict = MonomialSolveResult::Verdict::Unknown;
  res.certificate = MonomialSolveResult::Certificate::None;
  return res;
}

}  // namespace abcg
