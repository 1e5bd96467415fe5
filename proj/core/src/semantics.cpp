#include "glprover/semantics.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "glprover/error.hpp"

namespace glprover {

bool Frame::endpoints_in_worlds() const {
  return std::all_of(rel.begin(), rel.end(), [this](const WorldPair& p) {
    return worlds.contains(p.first) && worlds.contains(p.second);
  });
}

std::set<World> Frame::successors(World w) const {
  std::set<World> out;
  for (auto it = rel.lower_bound({w, 0}); it != rel.end() && it->first == w; ++it) {
    if (worlds.contains(it->second)) out.insert(it->second);
  }
  return out;
}

bool Model::valuation(const std::string& atom, World w) const {
  auto it = val.find(atom);
  return it != val.end() && it->second.contains(w);
}

namespace {

bool holds_unchecked(const Model& m, const Formula& f, World w) {
  switch (f.kind()) {
    case Kind::Falsum: return false;
    case Kind::Verum: return true;
    case Kind::Atom: return m.valuation(f.name(), w);
    case Kind::Not: return !holds_unchecked(m, f.body(), w);
    case Kind::And: return holds_unchecked(m, f.lhs(), w) && holds_unchecked(m, f.rhs(), w);
    case Kind::Or: return holds_unchecked(m, f.lhs(), w) || holds_unchecked(m, f.rhs(), w);
    case Kind::Imp: return !holds_unchecked(m, f.lhs(), w) || holds_unchecked(m, f.rhs(), w);
    case Kind::Iff: return holds_unchecked(m, f.lhs(), w) == holds_unchecked(m, f.rhs(), w);
    case Kind::Box:
      for (auto it = m.frame.rel.lower_bound({w, 0}); it != m.frame.rel.end() && it->first == w;
           ++it) {
        if (m.frame.worlds.contains(it->second) && !holds_unchecked(m, f.body(), it->second)) {
          return false;
        }
      }
      return true;
  }
  return false;
}

bool transitive(const Frame& fr) {
  for (const auto& [x, y] : fr.rel) {
    for (auto it = fr.rel.lower_bound({y, 0}); it != fr.rel.end() && it->first == y; ++it) {
      if (!fr.rel.contains({x, it->second})) return false;
    }
  }
  return true;
}

bool acyclic(const Frame& fr) {
  enum class Mark { White, Grey, Black };
  std::map<World, Mark> mark;
  for (World w : fr.worlds) mark[w] = Mark::White;
  std::function<bool(World)> visit = [&](World w) {
    mark[w] = Mark::Grey;
    for (World u : fr.successors(w)) {
      if (mark[u] == Mark::Grey) return false;
      if (mark[u] == Mark::White && !visit(u)) return false;
    }
    mark[w] = Mark::Black;
    return true;
  };
  for (World w : fr.worlds) {
    if (mark[w] == Mark::White && !visit(w)) return false;
  }
  return true;
}

// Saturating multiplication for budget arithmetic.
std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t pow2_sat(std::size_t e) { return e >= 64 ? UINT64_MAX : (std::uint64_t{1} << e); }

// Truth sets as world bitmasks on frames over 0..n-1.
struct BitModel {
  std::size_t n;
  std::vector<std::uint64_t> succ;
  std::map<std::string, std::uint64_t> val;

  std::uint64_t all() const { return n == 64 ? UINT64_MAX : ((std::uint64_t{1} << n) - 1); }

  std::uint64_t truth(const Formula& f) const {
    switch (f.kind()) {
      case Kind::Falsum: return 0;
      case Kind::Verum: return all();
      case Kind::Atom: {
        auto it = val.find(f.name());
        return it == val.end() ? 0 : it->second;
      }
      case Kind::Not: return all() & ~truth(f.body());
      case Kind::And: return truth(f.lhs()) & truth(f.rhs());
      case Kind::Or: return truth(f.lhs()) | truth(f.rhs());
      case Kind::Imp: return (all() & ~truth(f.lhs())) | truth(f.rhs());
      case Kind::Iff: return all() & ~(truth(f.lhs()) ^ truth(f.rhs()));
      case Kind::Box: {
        const std::uint64_t body = truth(f.body());
        std::uint64_t out = 0;
        for (std::size_t w = 0; w < n; ++w) {
          if ((succ[w] & ~body) == 0) out |= std::uint64_t{1} << w;
        }
        return out;
      }
    }
    return 0;
  }
};

}  // namespace

bool holds(const Model& m, const Formula& f, World w) {
  if (!m.frame.worlds.contains(w)) {
    throw PreconditionError("world " + std::to_string(w) + " is not in the model");
  }
  return holds_unchecked(m, f, w);
}

bool frame_valid(const Frame& fr, const Formula& f, std::uint64_t budget) {
  if (fr.worlds.empty()) throw PreconditionError("frame_valid needs a nonempty frame");
  const std::vector<std::string> names = [&] {
    auto s = atoms(f);
    return std::vector<std::string>(s.begin(), s.end());
  }();
  const std::vector<World> worlds(fr.worlds.begin(), fr.worlds.end());
  const std::size_t bits = names.size() * worlds.size();
  if (bits >= 64 || pow2_sat(bits) > budget) {
    throw BudgetExceeded("frame_valid: 2^" + std::to_string(bits) +
                         " valuations exceed the evaluation budget");
  }
  Model m{fr, {}};
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    m.val.clear();
    for (std::size_t a = 0; a < names.size(); ++a) {
      auto& set = m.val[names[a]];
      for (std::size_t i = 0; i < worlds.size(); ++i) {
        if ((v >> (a * worlds.size() + i)) & 1U) set.insert(worlds[i]);
      }
    }
    for (World w : worlds) {
      if (!holds_unchecked(m, f, w)) return false;
    }
  }
  return true;
}

bool is_itf(const Frame& fr) {
  if (fr.worlds.empty() || !fr.endpoints_in_worlds()) return false;
  for (const auto& [x, y] : fr.rel) {
    if (x == y) return false;
  }
  return transitive(fr);
}

bool is_transnt_finite(const Frame& fr) {
  if (fr.worlds.empty() || !fr.endpoints_in_worlds()) return false;
  return transitive(fr) && acyclic(fr);
}

Frame frame_from_mask(std::size_t worlds, std::uint64_t mask) {
  if (worlds * worlds > 64) throw PreconditionError("frame_from_mask supports at most 8 worlds");
  Frame fr;
  for (std::size_t i = 0; i < worlds; ++i) fr.worlds.insert(static_cast<World>(i));
  for (std::size_t i = 0; i < worlds; ++i) {
    for (std::size_t j = 0; j < worlds; ++j) {
      if ((mask >> (i * worlds + j)) & 1U) {
        fr.rel.insert({static_cast<World>(i), static_cast<World>(j)});
      }
    }
  }
  return fr;
}

Verdict oracle_valid(const Formula& f, std::size_t max_worlds, std::uint64_t budget) {
  if (max_worlds == 0 || max_worlds > 8) {
    throw PreconditionError("oracle_valid needs 1 <= max_worlds <= 8");
  }
  const auto atom_set = atoms(f);
  const std::vector<std::string> names(atom_set.begin(), atom_set.end());

  std::uint64_t cost = 0;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const std::uint64_t frames = pow2_sat(n * (n - 1));
    const std::uint64_t vals = pow2_sat(names.size() * n);
    cost = std::min<std::uint64_t>(UINT64_MAX - 1, cost) + mul_sat(frames, vals);
    if (cost > budget || cost == UINT64_MAX) {
      throw BudgetExceeded("oracle_valid: search space exceeds the evaluation budget");
    }
  }

  for (std::size_t n = 1; n <= max_worlds; ++n) {
    // Off-diagonal bit positions of the full n*n mask, ascending, so that
    // counting through `compact` visits irreflexive relations in ascending
    // full-mask order.
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) positions.push_back(i * n + j);
      }
    }
    const std::size_t val_bits = names.size() * n;
    BitModel bm{n, std::vector<std::uint64_t>(n, 0), {}};
    for (std::uint64_t compact = 0; compact < (std::uint64_t{1} << positions.size()); ++compact) {
      std::uint64_t full = 0;
      for (std::size_t b = 0; b < positions.size(); ++b) {
        if ((compact >> b) & 1U) full |= std::uint64_t{1} << positions[b];
      }
      for (std::size_t i = 0; i < n; ++i) bm.succ[i] = (full >> (i * n)) & bm.all();
      bool trans = true;
      for (std::size_t i = 0; i < n && trans; ++i) {
        for (std::size_t j = 0; j < n && trans; ++j) {
          if (((bm.succ[i] >> j) & 1U) && (bm.succ[j] & ~bm.succ[i]) != 0) trans = false;
        }
      }
      if (!trans) continue;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << val_bits); ++v) {
        bm.val.clear();
        for (std::size_t a = 0; a < names.size(); ++a) {
          bm.val[names[a]] = (v >> (a * n)) & bm.all();
        }
        const std::uint64_t t = bm.truth(f);
        if (t == bm.all()) continue;
        World w = 0;
        while ((t >> w) & 1U) ++w;
        Model m{frame_from_mask(n, full), {}};
        for (const auto& [name, bits] : bm.val) {
          auto& set = m.val[name];
          for (std::size_t i = 0; i < n; ++i) {
            if ((bits >> i) & 1U) set.insert(static_cast<World>(i));
          }
        }
        return Falsified{std::move(m), w};
      }
    }
  }
  return ValidUpTo{max_worlds};
}

std::set<std::string> atoms_of_interest(const Model& m1, const Model& m2) {
  std::set<std::string> out;
  for (const auto& [a, _] : m1.val) out.insert(a);
  for (const auto& [a, _] : m2.val) out.insert(a);
  return out;
}

namespace {

bool agree_on_atoms(const Model& m1, World w1, const Model& m2, World w2,
                    const std::set<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [&](const std::string& a) {
    return m1.valuation(a, w1) == m2.valuation(a, w2);
  });
}

// One forth-and-back pass for the pair (w1, w2) against relation `z`.
bool zigzag(const Model& m1, World w1, const Model& m2, World w2, const WorldPairs& z) {
  const auto s1 = m1.frame.successors(w1);
  const auto s2 = m2.frame.successors(w2);
  for (World u1 : s1) {
    if (std::none_of(s2.begin(), s2.end(), [&](World u2) { return z.contains({u1, u2}); })) {
      return false;
    }
  }
  for (World u2 : s2) {
    if (std::none_of(s1.begin(), s1.end(), [&](World u1) { return z.contains({u1, u2}); })) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_bisimulation(const Model& m1, const Model& m2, const WorldPairs& z) {
  const auto names = atoms_of_interest(m1, m2);
  return std::all_of(z.begin(), z.end(), [&](const WorldPair& p) {
    const auto [w1, w2] = p;
    return m1.frame.worlds.contains(w1) && m2.frame.worlds.contains(w2) &&
           agree_on_atoms(m1, w1, m2, w2, names) && zigzag(m1, w1, m2, w2, z);
  });
}

WorldPairs largest_bisimulation(const Model& m1, const Model& m2) {
  const auto names = atoms_of_interest(m1, m2);
  WorldPairs z;
  for (World w1 : m1.frame.worlds) {
    for (World w2 : m2.frame.worlds) {
      if (agree_on_atoms(m1, w1, m2, w2, names)) z.insert({w1, w2});
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = z.begin(); it != z.end();) {
      if (!zigzag(m1, it->first, m2, it->second, z)) {
        it = z.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return z;
}

}  // namespace glprover
