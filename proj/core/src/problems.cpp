// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subsep/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>

#include "subsep/errors.hpp"
#include "subsep/numeric.hpp"

namespace subsep {

// --- MaxWeightCover -------------------------------------------------------

void cover_instance::validate() const {
  if (n_elements < 1) throw validation_error("cover instance needs elements");
  if (sets.empty()) throw validation_error("cover instance needs sets");
  if (weights.size() != n_elements) {
    throw validation_error("cover instance needs one weight per element");
  }
  for (double w : weights) {
    if (!(w >= 0.0)) throw validation_error("element weights must be >= 0");
  }
  for (const auto& set : sets) {
    std::set<element_id> seen;
    for (element_id e : set) {
      if (e >= n_elements) {
        throw validation_error("set references element " + std::to_string(e) +
                               " outside the universe");
      }
      if (!seen.insert(e).second) {
        throw validation_error("set lists element " + std::to_string(e) +
                               " twice");
      }
    }
  }
  if (!set_labels.empty() && set_labels.size() != sets.size()) {
    throw validation_error("cover set labels must match the number of sets");
  }
}

std::vector<std::size_t> cover_instance::frequencies() const {
  std::vector<std::size_t> freq(n_elements, 0);
  for (const auto& set : sets) {
    for (element_id e : set) ++freq[e];
  }
  return freq;
}

std::size_t cover_instance::max_frequency() const {
  const auto freq = frequencies();
  std::size_t best = 0;
  for (element_id e = 0; e < n_elements; ++e) {
    if (weights[e] > 0.0) best = std::max(best, freq[e]);
  }
  return best;
}

std::size_t cover_instance::min_frequency() const {
  const auto freq = frequencies();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool any = false;
  for (element_id e = 0; e < n_elements; ++e) {
    if (weights[e] > 0.0) {
      best = std::min(best, freq[e]);
      any = true;
    }
  }
  return any ? best : 0;
}

problem_oracle cover_oracle(const cover_instance& inst) {
  inst.validate();
  auto shared = std::make_shared<const cover_instance>(inst);

  // Element masks per set; the union drives the weight sum.
  auto masks = std::make_shared<std::vector<subset>>();
  masks->reserve(shared->sets.size());
  for (const auto& set : shared->sets) {
    masks->push_back(subset::of(shared->n_elements, set));
  }

  ground_set ground(shared->num_sets(), shared->set_labels);
  value_oracle::eval_fn fn = [shared, masks](const subset& chosen) {
    subset covered(shared->n_elements);
    chosen.for_each([&](element_id s) { covered = covered.unite((*masks)[s]); });
    double total = 0.0;
    covered.for_each([&](element_id e) { total += shared->weights[e]; });
    return total;
  };

  certified_separability certified;
  certified.super_p = static_cast<double>(inst.max_frequency());
  certified.at_most_p = static_cast<double>(inst.max_frequency());
  certified.at_least_p = static_cast<double>(inst.min_frequency());
  return {value_oracle(std::move(ground), std::move(fn)), certified};
}

// --- OWA item selection ---------------------------------------------------

void owa_instance::validate() const {
  if (n_agents < 1) throw validation_error("owa instance needs agents");
  if (m_items < 1) throw validation_error("owa instance needs items");
  if (k < 1 || k > m_items) {
    throw validation_error("approval count k must be in 1..m_items");
  }
  if (approvals.size() != n_agents) {
    throw validation_error("owa instance needs one approval set per agent");
  }
  for (const auto& approved : approvals) {
    if (approved.size() != k) {
      throw validation_error(
          "k-approval utilities require every approval set to have exactly " +
          std::to_string(k) + " items");
    }
    std::set<element_id> seen;
    for (element_id item : approved) {
      if (item >= m_items) {
        throw validation_error("approval references item " +
                               std::to_string(item) + " outside the universe");
      }
      if (!seen.insert(item).second) {
        throw validation_error("approval set lists item " +
                               std::to_string(item) + " twice");
      }
    }
  }
  if (owa.empty()) throw validation_error("owa vector must be non-empty");
  for (std::size_t j = 0; j < owa.size(); ++j) {
    if (!(owa[j] >= 0.0)) throw validation_error("owa weights must be >= 0");
    if (j > 0 && owa[j] > owa[j - 1] + kAbsTol) {
      throw validation_error(
          "owa weights must be non-increasing (applied to utilities sorted "
          "descending)");
    }
  }
}

std::vector<double> owa_chamberlin_courant(std::size_t committee_size) {
  std::vector<double> owa(committee_size, 0.0);
  if (committee_size > 0) owa[0] = 1.0;
  return owa;
}

std::vector<double> owa_pav(std::size_t committee_size) {
  std::vector<double> owa(committee_size);
  for (std::size_t j = 0; j < committee_size; ++j) {
    owa[j] = 1.0 / static_cast<double>(j + 1);
  }
  return owa;
}

problem_oracle owa_oracle(const owa_instance& inst,
                          std::size_t committee_size) {
  inst.validate();
  if (committee_size < 1) throw infeasible_error("committee size must be >= 1");
  if (inst.owa.size() < committee_size) {
    throw validation_error("owa vector of length " +
                           std::to_string(inst.owa.size()) +
                           " is shorter than the committee size " +
                           std::to_string(committee_size));
  }
  auto shared = std::make_shared<const owa_instance>(inst);

  // With 0/1 utilities the OWA dot product collapses to a prefix sum of
  // the weights, cut at the number of approved items present.
  auto prefix = std::make_shared<std::vector<double>>(committee_size + 1, 0.0);
  for (std::size_t j = 0; j < committee_size; ++j) {
    (*prefix)[j + 1] = (*prefix)[j] + shared->owa[j];
  }
  auto approval_masks = std::make_shared<std::vector<subset>>();
  approval_masks->reserve(shared->n_agents);
  for (const auto& approved : shared->approvals) {
    approval_masks->push_back(subset::of(shared->m_items, approved));
  }

  ground_set ground(shared->m_items);
  const std::size_t cut = committee_size;
  value_oracle::eval_fn fn = [shared, prefix, approval_masks,
                              cut](const subset& chosen) {
    double total = 0.0;
    for (const subset& mask : *approval_masks) {
      const std::size_t approved_chosen = mask.intersect_count(chosen);
      total += (*prefix)[std::min(approved_chosen, cut)];
    }
    return total;
  };

  certified_separability certified;
  certified.super_p = static_cast<double>(inst.k);
  certified.at_most_p = static_cast<double>(inst.k);
  return {value_oracle(std::move(ground), std::move(fn)), certified};
}

// --- Weighted b-matching --------------------------------------------------

void bmatching_instance::validate() const {
  if (nx < 1) throw validation_error("bmatching instance needs X vertices");
  if (ny < 1) throw validation_error("bmatching instance needs Y vertices");
  if (capacities.size() != nx) {
    throw validation_error("bmatching instance needs one capacity per X vertex");
  }
  for (std::int64_t c : capacities) {
    if (c < 1) throw validation_error("capacities must be positive integers");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& edge : edges) {
    if (edge.x >= nx || edge.y >= ny) {
      throw validation_error("edge (" + std::to_string(edge.x) + "," +
                             std::to_string(edge.y) + ") is out of range");
    }
    if (!(edge.weight >= 0.0)) {
      throw validation_error("edge weights must be >= 0");
    }
    if (!seen.insert({edge.x, edge.y}).second) {
      throw validation_error("duplicate edge (" + std::to_string(edge.x) + "," +
                             std::to_string(edge.y) + ")");
    }
  }
}

std::size_t bmatching_instance::y_degree_bound() const {
  std::vector<std::size_t> deg(ny, 0);
  for (const auto& edge : edges) ++deg[edge.y];
  std::size_t bound = 0;
  for (std::size_t d : deg) bound = std::max(bound, d);
  return bound;
}

namespace {

// Successive most-profitable augmenting paths on the flow network
//   source -> x (capacity c(x), profit 0)
//   x -> y     (capacity 1, profit w(x,y))
//   y -> sink  (capacity 1, profit 0)
// restricted to x in s. Augmenting stops once the best residual path no
// longer improves the total, which is optimal because path profits are
// non-increasing along the successive-shortest-path sequence. Integral
// weights stay integral through every sum, so those instances are solved
// in exact arithmetic.
struct flow_arc {
  std::size_t to;
  std::size_t rev;    // index of the reverse arc in graph[to]
  std::int64_t cap;
  double profit;
};

class flow_network {
 public:
  explicit flow_network(std::size_t nodes) : graph_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap,
               double profit) {
    graph_[from].push_back({to, graph_[to].size(), cap, profit});
    graph_[to].push_back({from, graph_[from].size() - 1, 0, -profit});
  }

  // One Bellman-Ford pass for the most profitable residual source->sink
  // path; returns false when no residual path exists.
  bool best_path(std::size_t source, std::size_t sink,
                 std::vector<std::pair<std::size_t, std::size_t>>& parent,
                 double& profit) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    std::vector<double> dist(graph_.size(), neg_inf);
    parent.assign(graph_.size(), {SIZE_MAX, SIZE_MAX});
    dist[source] = 0.0;
    for (std::size_t round = 0; round + 1 < graph_.size(); ++round) {
      bool changed = false;
      for (std::size_t u = 0; u < graph_.size(); ++u) {
        if (dist[u] == neg_inf) continue;
        for (std::size_t a = 0; a < graph_[u].size(); ++a) {
          const flow_arc& arc = graph_[u][a];
          if (arc.cap <= 0) continue;
          if (dist[u] + arc.profit > dist[arc.to]) {
            dist[arc.to] = dist[u] + arc.profit;
            parent[arc.to] = {u, a};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[sink] == neg_inf) return false;
    profit = dist[sink];
    return true;
  }

  void augment_unit(std::size_t source, std::size_t sink,
                    const std::vector<std::pair<std::size_t, std::size_t>>& parent) {
    std::size_t node = sink;
    while (node != source) {
      auto [u, a] = parent[node];
      flow_arc& arc = graph_[u][a];
      arc.cap -= 1;
      graph_[arc.to][arc.rev].cap += 1;
      node = u;
    }
  }

 private:
  std::vector<std::vector<flow_arc>> graph_;
};

}  // namespace

double max_weight_b_matching(const bmatching_instance& inst, const subset& s) {
  if (s.universe_size() != inst.nx) {
    throw validation_error("subset does not match the instance's X side");
  }
  const std::size_t source = 0;
  const std::size_t x_base = 1;
  const std::size_t y_base = 1 + inst.nx;
  const std::size_t sink = 1 + inst.nx + inst.ny;
  flow_network net(sink + 1);

  for (std::size_t x = 0; x < inst.nx; ++x) {
    if (s.contains(x)) {
      net.add_arc(source, x_base + x, inst.capacities[x], 0.0);
    }
  }
  bool any_edge = false;
  for (const auto& edge : inst.edges) {
    if (s.contains(edge.x)) {
      net.add_arc(x_base + edge.x, y_base + edge.y, 1, edge.weight);
      any_edge = true;
    }
  }
  if (!any_edge) return 0.0;
  for (std::size_t y = 0; y < inst.ny; ++y) {
    net.add_arc(y_base + y, sink, 1, 0.0);
  }

  double total = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> parent;
  double path_profit = 0.0;
  while (net.best_path(source, sink, parent, path_profit)) {
    if (path_profit <= kRelTol * std::max(1.0, std::fabs(total))) break;
    net.augment_unit(source, sink, parent);
    total += path_profit;
  }
  return total;
}

problem_oracle bmatching_oracle(const bmatching_instance& inst) {
  inst.validate();
  auto shared = std::make_shared<const bmatching_instance>(inst);
  ground_set ground(shared->nx);
  value_oracle::eval_fn fn = [shared](const subset& chosen) {
    return max_weight_b_matching(*shared, chosen);
  };
  certified_separability certified;
  certified.super_p = static_cast<double>(inst.y_degree_bound());
  return {value_oracle(std::move(ground), std::move(fn)), certified};
}

}  // namespace subsep
