#include "nlcslab/codes.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nlcs {

LinearCode LinearCode::from_parity_check(BinaryMatrix h) {
  LinearCode c;
  c.generator = h.kernel_basis();
  c.parity_check = std::move(h);
  return c;
}

void RegularGraph::validate() const {
  if (incidence.size() != num_vertices) {
    throw std::invalid_argument("RegularGraph: incidence size mismatch");
  }
  std::vector<std::size_t> edge_uses(num_edges(), 0);
  for (const auto& ev : incidence) {
    if (ev.size() != degree) {
      throw std::invalid_argument("RegularGraph: vertex degree mismatch");
    }
    for (auto e : ev) {
      if (e >= edge_uses.size()) {
        throw std::invalid_argument("RegularGraph: edge id out of range");
      }
      ++edge_uses[e];
    }
  }
  for (auto u : edge_uses) {
    if (u != 2) {
      throw std::invalid_argument(
          "RegularGraph: every edge must appear in exactly 2 lists");
    }
  }
}

RegularGraph RegularGraph::complete(std::size_t v) {
  RegularGraph g;
  g.num_vertices = v;
  g.degree = v - 1;
  g.incidence.resize(v);
  std::size_t edge = 0;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      g.incidence[a].push_back(edge);
      g.incidence[b].push_back(edge);
      ++edge;
    }
  }
  g.validate();
  return g;
}

RegularGraph RegularGraph::random(std::size_t v, std::size_t d,
                                  CounterRng& rng) {
  if (v * d % 2 != 0) {
    throw std::invalid_argument("RegularGraph::random: v*d must be even");
  }
  for (int attempt = 0; attempt < 2000; ++attempt) {
    // Configuration model: pair up vertex stubs uniformly at random.
    std::vector<std::size_t> stubs;
    stubs.reserve(v * d);
    for (std::size_t a = 0; a < v; ++a) {
      for (std::size_t j = 0; j < d; ++j) stubs.push_back(a);
    }
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[rng.below(i)]);
    }
    bool ok = true;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    RegularGraph g;
    g.num_vertices = v;
    g.degree = d;
    g.incidence.resize(v);
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      std::size_t a = stubs[i], b = stubs[i + 1];
      if (a == b || !seen.insert({std::min(a, b), std::max(a, b)}).second) {
        ok = false;  // self-loop or multi-edge: resample
        break;
      }
      std::size_t edge = i / 2;
      g.incidence[a].push_back(edge);
      g.incidence[b].push_back(edge);
    }
    if (ok) {
      g.validate();
      return g;
    }
  }
  throw std::runtime_error("RegularGraph::random: rejection sampling stalled");
}

RegularGraph RegularGraph::read(std::istream& in) {
  RegularGraph g;
  if (!(in >> g.num_vertices >> g.degree)) {
    throw std::runtime_error("graph file: bad header");
  }
  g.incidence.resize(g.num_vertices);
  for (auto& ev : g.incidence) {
    ev.resize(g.degree);
    for (auto& e : ev) {
      if (!(in >> e)) {
        throw std::runtime_error("graph file: truncated incidence list");
      }
    }
  }
  g.validate();
  return g;
}

void RegularGraph::write(std::ostream& out) const {
  out << num_vertices << ' ' << degree << '\n';
  for (const auto& ev : incidence) {
    for (std::size_t j = 0; j < ev.size(); ++j) {
      out << (j ? " " : "") << ev[j];
    }
    out << '\n';
  }
}

BinaryMatrix dual_parity_check(const BinaryMatrix& h) {
  return h.kernel_basis();
}

BinaryMatrix dual_tensor_parity_check(const BinaryMatrix& h0,
                                      const BinaryMatrix& h1) {
  return BinaryMatrix::tensor(h0, h1);
}

BinaryMatrix odd_weight_transform(const BinaryMatrix& h) {
  std::size_t pivot = h.rows();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.row(i).popcount() % 2 == 1) {
      pivot = i;
      break;
    }
  }
  if (pivot == h.rows()) {
    throw std::runtime_error("odd_weight_transform: all rows have even weight");
  }
  BinaryMatrix out = h;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.row(i).popcount() % 2 == 0) {
      out.set_row(i, h.row(i) ^ h.row(pivot));
    }
  }
  return out;
}

BinaryMatrix tanner_lift(const RegularGraph& g, const BinaryMatrix& h) {
  if (h.cols() != g.degree) {
    throw std::invalid_argument("tanner_lift: local column count != degree");
  }
  BinaryMatrix out(g.num_vertices * h.rows(), g.num_edges());
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    for (std::size_t j = 0; j < h.rows(); ++j) {
      for (std::size_t c = 0; c < g.degree; ++c) {
        if (h.get(j, c)) {
          out.set(v * h.rows() + j, g.incidence[v][c], true);
        }
      }
    }
  }
  return out;
}

Fraction odd_row_fraction(const BinaryMatrix& h) {
  if (h.rows() == 0) {
    throw std::invalid_argument("odd_row_fraction: empty matrix");
  }
  Fraction f;
  f.den = h.rows();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.row(i).popcount() % 2 == 1) ++f.num;
  }
  return f;
}

BinaryMatrix sample_random_matrix(std::size_t r, std::size_t d,
                                  std::uint64_t seed) {
  CounterRng rng(seed);
  BinaryMatrix m(r, d);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m.set(i, j, rng.coin());
    }
  }
  return m;
}

RandomCodeLemmaReport verify_random_code_lemma(std::size_t r, std::size_t d,
                                               std::size_t trials,
                                               std::uint64_t seed) {
  RandomCodeLemmaReport rep;
  rep.r = r;
  rep.d = d;
  rep.trials = trials;
  rep.rho_warning = (2 * r >= d);
  rep.odd_row_bound = 1.0 - std::pow(0.5, static_cast<double>(r));
  rep.ones_in_span_bound =
      (std::pow(2.0, static_cast<double>(r)) - 1.0) /
      std::pow(2.0, static_cast<double>(d));
  std::size_t odd_hits = 0, span_hits = 0;
  BitVec ones(d);
  for (std::size_t j = 0; j < d; ++j) ones.set(j, true);
  for (std::size_t t = 0; t < trials; ++t) {
    // Trials keyed by a derived stream so partitioning is deterministic.
    CounterRng rng(seed, t + 1);
    BinaryMatrix a(r, d);
    bool odd = false;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < d; ++j) a.set(i, j, rng.coin());
      if (a.row(i).popcount() % 2 == 1) odd = true;
    }
    if (odd) ++odd_hits;
    // Lemma 4.2 proof: some kernel vector is odd iff 1^d is NOT in the row
    // span of A.
    if (a.in_row_span(ones)) ++span_hits;
  }
  rep.odd_row_freq = trials ? static_cast<double>(odd_hits) / trials : 0.0;
  rep.ones_in_span_freq =
      trials ? static_cast<double>(span_hits) / trials : 0.0;
  double p = rep.odd_row_bound;
  double sigma_odd = std::sqrt(std::max(p * (1 - p), 1e-12) /
                               std::max<std::size_t>(trials, 1));
  rep.odd_row_pass = std::abs(rep.odd_row_freq - p) <= 3 * sigma_odd;
  double b = rep.ones_in_span_bound;
  double sigma_span = std::sqrt(std::max(b * (1 - b), 1e-12) /
                                std::max<std::size_t>(trials, 1));
  rep.ones_in_span_pass = rep.ones_in_span_freq <= b + 3 * sigma_span;
  return rep;
}

namespace {

bool has_odd_row(const BinaryMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).popcount() % 2 == 1) return true;
  }
  return false;
}

BinaryMatrix odd_if_possible(const BinaryMatrix& m) {
  return has_odd_row(m) ? odd_weight_transform(m) : m;
}

}  // namespace

CssCodePair assemble_quantum_tanner(const RegularGraph& g,
                                    const BinaryMatrix& h0,
                                    const BinaryMatrix& h1) {
  std::size_t d = h0.cols();
  if (h1.cols() != d) {
    throw std::invalid_argument("assemble_quantum_tanner: h0/h1 column counts differ");
  }
  if (g.degree != d * d) {
    throw std::invalid_argument(
        "assemble_quantum_tanner: graph degree must be d^2");
  }
  BinaryMatrix g0 = dual_parity_check(h0);
  BinaryMatrix g1 = dual_parity_check(h1);
  BinaryMatrix local_x = odd_if_possible(BinaryMatrix::tensor(h0, g1));
  BinaryMatrix local_z = odd_if_possible(BinaryMatrix::tensor(g0, h1));
  CssCodePair pair;
  pair.h_x = tanner_lift(g, local_x);
  pair.h_z = tanner_lift(g, local_z);
  for (std::size_t i = 0; i < pair.h_x.rows(); ++i) {
    for (std::size_t j = 0; j < pair.h_z.rows(); ++j) {
      if (BitVec::dot(pair.h_x.row(i), pair.h_z.row(j))) {
        ++pair.css_violations;
      }
    }
  }
  return pair;
}

}  // namespace nlcs
