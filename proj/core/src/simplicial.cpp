#include "commalg/simplicial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "commalg/errors.hpp"
#include "commalg/linalg.hpp"
#include "commalg/parallel.hpp"

namespace commalg {
namespace {

void require_small(std::size_t n) {
  if (n > kMaxSimplicialVertices) {
    throw InvalidInput("simplicial computations are limited to " + std::to_string(kMaxSimplicialVertices) +
                       " vertices, got " + std::to_string(n));
  }
}

std::vector<VarMask> maximal_sets(std::vector<VarMask> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VarMask> out;
  for (VarMask f : faces) {
    bool covered = std::any_of(faces.begin(), faces.end(), [&](VarMask g) { return g != f && (g & f) == f; });
    if (!covered) out.push_back(f);
  }
  return out;
}

std::string face_names(const VarContext& ctx, VarMask face, const char* sep) {
  std::string out;
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    if (!(face >> v & 1)) continue;
    if (!out.empty()) out += sep;
    out += ctx.name(v);
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(ContextPtr vertices, std::vector<VarMask> faces)
    : ctx_(std::move(vertices)) {
  if (!ctx_) throw InvalidInput("simplicial complex without a vertex context");
  const VarMask all = full_mask(ctx_->size());
  for (VarMask f : faces) {
    if (f & ~all) throw InvalidInput("face uses a vertex outside the context");
  }
  facets_ = maximal_sets(std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(ContextPtr vertices) {
  const auto n = vertices->size();
  return {std::move(vertices), {full_mask(n)}};
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (VarMask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VarMask f) { return popcount(f) == popcount(facets_.front()); });
}

bool SimplicialComplex::contains_face(VarMask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarMask f) { return (f & face) == face; });
}

std::vector<std::vector<VarMask>> SimplicialComplex::faces_by_dimension() const {
  std::unordered_set<VarMask> seen;
  for (VarMask f : facets_) {
    // Walk every subset of the facet.
    VarMask s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<std::vector<VarMask>> out(static_cast<std::size_t>(dimension() + 2));
  for (VarMask s : seen) out[static_cast<std::size_t>(popcount(s))].push_back(s);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : faces_by_dimension()) out.push_back(level.size());
  return out;
}

SimplicialComplex SimplicialComplex::restriction(VarMask mask) const {
  if (facets_.empty()) return *this;
  std::vector<VarMask> faces;
  for (VarMask f : facets_) faces.push_back(f & mask);
  return {ctx_, std::move(faces)};
}

SimplicialComplex SimplicialComplex::link(VarMask face) const {
  std::vector<VarMask> faces;
  for (VarMask f : facets_) {
    if ((f & face) == face) faces.push_back(f & ~face);
  }
  return {ctx_, std::move(faces)};
}

SimplicialComplex SimplicialComplex::cone(const std::string& apex) const {
  auto names = ctx_->names();
  names.push_back(apex);
  const VarMask bit = VarMask{1} << ctx_->size();
  std::vector<VarMask> faces;
  for (VarMask f : facets_) faces.push_back(f | bit);
  return {VarContext::make(std::move(names)), std::move(faces)};
}

std::string SimplicialComplex::to_string() const {
  if (facets_.empty()) return "void";
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    out << (i ? ", {" : "{") << face_names(*ctx_, facets_[i], ",") << '}';
  }
  out << '}';
  return out.str();
}

std::size_t HomologyRanks::at(int i) const {
  const auto idx = static_cast<long>(i) + 1;
  if (idx < 0 || idx >= static_cast<long>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(idx)];
}

bool HomologyRanks::all_zero() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

int HomologyRanks::euler_characteristic() const {
  int chi = 0;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const int sign = (k % 2 == 0) ? -1 : 1;  // k = i + 1
    chi += sign * static_cast<int>(ranks[k]);
  }
  return chi;
}

SimplicialComplex complex_of(const MonomialIdeal& i) {
  if (!i.is_squarefree()) throw InvalidInput("complex_of needs a squarefree monomial ideal");
  if (i.is_unit()) throw InvalidInput("the unit ideal has no Stanley-Reisner complex");
  const VarMask all = full_mask(i.num_vars());
  std::vector<VarMask> facets;
  for (const auto& p : minimal_primes(i)) facets.push_back(all & ~p.support());
  return {i.context(), std::move(facets)};
}

MonomialIdeal ideal_of(const SimplicialComplex& c) {
  if (c.is_void()) return MonomialIdeal::unit(c.context());
  const VarMask all = full_mask(c.num_vertices());
  std::vector<MonomialIdeal> primes;
  for (VarMask f : c.facets()) primes.push_back(MonomialIdeal::of_variables(c.context(), all & ~f));
  return intersect_all(primes);
}

HomologyRanks reduced_homology(const SimplicialComplex& c, const FieldSpec& f) {
  if (c.is_void()) throw InvalidInput("reduced homology of the void complex is undefined");
  const int dim = c.dimension();
  HomologyRanks out;
  out.ranks.assign(static_cast<std::size_t>(dim + 2), 0);
  VarMask common = ~VarMask{0};
  for (VarMask facet : c.facets()) common &= facet;
  if (dim >= 0 && common != 0) return out;  // a cone is acyclic

  const auto levels = c.faces_by_dimension();
  // rank of the boundary map from level k (faces with k vertices) to level k - 1
  std::vector<std::size_t> boundary_rank(levels.size() + 1, 0);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const auto& rows = levels[k - 1];
    const auto& cols = levels[k];
    std::unordered_map<VarMask, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t col = 0; col < cols.size(); ++col) {
      std::int64_t sign = 1;
      for (VarMask rest = cols[col]; rest; rest &= rest - 1) {
        const VarMask v = rest & -rest;
        m[row_index.at(cols[col] & ~v)][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = rank_over(m, f);
  }
  for (std::size_t k = 0; k < levels.size(); ++k) {
    out.ranks[k] = levels[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return out;
}

std::size_t BettiTable::at(int i, VarMask sigma) const {
  auto it = entries_.find({i, sigma});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t sum = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == i) sum += rank;
  }
  return sum;
}

int BettiTable::projective_dimension_of_quotient() const {
  int top = -1;
  for (const auto& [key, rank] : entries_) top = std::max(top, key.first);
  return top + 1;
}

std::string BettiTable::to_csv() const {
  std::ostringstream out;
  out << "i,sigma,rank\n";
  for (const auto& [key, rank] : entries_) {
    out << key.first << ',' << face_names(*ctx_, key.second, ";") << ',' << rank << '\n';
  }
  return out.str();
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, rank] : entries_) {
    nlohmann::json sigma = nlohmann::json::array();
    for (std::size_t v = 0; v < ctx_->size(); ++v) {
      if (key.second >> v & 1) sigma.push_back(ctx_->name(v));
    }
    entries.push_back({{"i", key.first}, {"sigma", sigma}, {"rank", rank}});
  }
  return {{"vars", ctx_->names()},
          {"projective_dimension", projective_dimension_of_quotient()},
          {"entries", entries}};
}

BettiTable graded_betti(const MonomialIdeal& i, const FieldSpec& f, unsigned jobs) {
  require_small(i.num_vars());
  const auto c = complex_of(i);
  const std::size_t subsets = std::size_t{1} << i.num_vars();
  std::vector<std::vector<std::pair<int, std::size_t>>> found(subsets);
  parallel_for(subsets, jobs, [&](std::size_t s) {
    if (s == 0) return;
    const VarMask sigma = static_cast<VarMask>(s);
    const auto h = reduced_homology(c.restriction(sigma), f);
    const int size = popcount(sigma);
    for (std::size_t k = 0; k < h.ranks.size(); ++k) {
      if (h.ranks[k] == 0) continue;
      const int degree = static_cast<int>(k) - 1;
      found[s].emplace_back(size - degree - 2, h.ranks[k]);
    }
  });
  BettiTable::Entries entries;
  for (std::size_t s = 1; s < subsets; ++s) {
    for (const auto& [idx, rank] : found[s]) {
      if (idx < 0) throw MethodDisagreement("negative homological index in the Hochster sweep");
      entries.emplace(std::make_pair(idx, static_cast<VarMask>(s)), rank);
    }
  }
  return {i.context(), std::move(entries)};
}

int depth(const MonomialIdeal& i, const FieldSpec& f, unsigned jobs) {
  if (i.is_unit()) throw InvalidInput("depth of the zero module (unit ideal) is undefined");
  if (!i.is_squarefree()) {
    const auto pol = polarize(i);
    return depth(pol.ideal, f, jobs) - static_cast<int>(pol.added_variables);
  }
  const auto table = graded_betti(i, f, jobs);
  return static_cast<int>(i.num_vars()) - table.projective_dimension_of_quotient();
}

int depth_of_sum(const std::vector<MonomialIdeal>& ideals, const FieldSpec& f, unsigned jobs) {
  if (ideals.empty()) throw InvalidInput("depth of an empty direct sum");
  int best = std::numeric_limits<int>::max();
  for (const auto& i : ideals) best = std::min(best, depth(i, f, jobs));
  return best;
}

int depth_from_links(const SimplicialComplex& c, const FieldSpec& f) {
  if (c.is_void()) throw InvalidInput("depth of the void complex is undefined");
  require_small(c.num_vertices());
  int best = std::numeric_limits<int>::max();
  for (const auto& level : c.faces_by_dimension()) {
    for (VarMask face : level) {
      const auto h = reduced_homology(c.link(face), f);
      for (std::size_t k = 0; k < h.ranks.size(); ++k) {
        if (h.ranks[k] == 0) continue;
        best = std::min(best, static_cast<int>(k) - 1 + popcount(face) + 1);
      }
    }
  }
  return best;
}

bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& f) {
  if (c.is_void()) throw InvalidInput("Cohen-Macaulayness of the void complex is undefined");
  require_small(c.num_vertices());
  for (const auto& level : c.faces_by_dimension()) {
    for (VarMask face : level) {
      const auto lk = c.link(face);
      const auto h = reduced_homology(lk, f);
      for (int i = -1; i < lk.dimension(); ++i) {
        if (h.at(i) != 0) return false;
      }
    }
  }
  return true;
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json facets = nlohmann::json::array();
  for (VarMask f : c.facets()) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t v = 0; v < c.num_vertices(); ++v) {
      if (f >> v & 1) names.push_back(c.context()->name(v));
    }
    facets.push_back(names);
  }
  return {{"vertices", c.context()->names()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets")) {
    throw InvalidInput("a complex needs \"vertices\" and \"facets\"");
  }
  if (!j.at("vertices").is_array()) throw InvalidInput("\"vertices\" must be an array");
  std::vector<std::string> names;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw InvalidInput("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  auto ctx = VarContext::make(std::move(names));
  if (!j.at("facets").is_array()) throw InvalidInput("\"facets\" must be an array");
  std::vector<VarMask> facets;
  for (const auto& facet : j.at("facets")) {
    if (!facet.is_array()) throw InvalidInput("each facet must be an array of vertex names");
    VarMask mask = 0;
    for (const auto& v : facet) {
      if (!v.is_string()) throw InvalidInput("vertex names must be strings");
      auto idx = ctx->index_of(v.get<std::string>());
      if (!idx) throw InvalidInput("unknown vertex '" + v.get<std::string>() + "'");
      mask |= VarMask{1} << *idx;
    }
    facets.push_back(mask);
  }
  return {ctx, std::move(facets)};
}

}  // namespace commalg
