#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfkit/hierarchy.hpp"
#include "hfkit/printer.hpp"

namespace hfkit {

// Independent check of the classifier: build the E_n / U_n closure sets by
// saturation over a subformula-closed universe, transcribing the generation
// rules directly. A derivation of a formula only ever uses its subformulas,
// so membership is decided within any universe that is closed under
// subformulas.
class ClosureOracle {
 public:
  static constexpr std::uint64_t kMaxLevel = 3;

  // Adds the formula and all its subformulas to the universe.
  void add(const Formula& f) {
    add_node(f);
    dirty_ = true;
  }

  // Least n <= kMaxLevel with f in E_n (resp. U_n); kMaxLevel + 1 if none.
  std::uint64_t e_level(const Formula& f) { return level(f, HierarchyClass::E); }
  std::uint64_t u_level(const Formula& f) { return level(f, HierarchyClass::U); }

 private:
  struct Entry {
    Formula formula;
    int left = -1;
    int right = -1;  // implication antecedent is left
    bool in_e[kMaxLevel + 1] = {};
    bool in_u[kMaxLevel + 1] = {};
  };

  int add_node(const Formula& f) {
    const std::string key = print(f);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Entry e;
    e.formula = f;
    switch (f.kind()) {
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        e.left = add_node(f.left());
        e.right = add_node(f.right());
        break;
      case FormulaKind::Forall:
      case FormulaKind::Exists:
      case FormulaKind::BForall:
      case FormulaKind::BExists:
        e.left = add_node(f.body());
        break;
      default:
        break;
    }
    const int id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    index_.emplace(key, id);
    dirty_ = true;
    return id;
  }

  void saturate() {
    for (Entry& e : entries_) {
      const bool bounded = is_delta0(e.formula);
      e.in_e[0] = e.in_u[0] = bounded;
      for (std::uint64_t n = 1; n <= kMaxLevel; ++n)
        e.in_e[n] = e.in_u[n] = false;
    }
    for (std::uint64_t n = 1; n <= kMaxLevel; ++n) {
      // E_n: closure of U_{n-1} under /\, \/, bounded quantifiers, exists.
      bool changed = true;
      while (changed) {
        changed = false;
        for (Entry& e : entries_) {
          if (e.in_e[n]) continue;
          bool gen = e.in_u[n - 1];
          if (!gen) switch (e.formula.kind()) {
              case FormulaKind::And:
              case FormulaKind::Or:
                gen = entries_[e.left].in_e[n] && entries_[e.right].in_e[n];
                break;
              case FormulaKind::BForall:
              case FormulaKind::BExists:
              case FormulaKind::Exists:
                gen = entries_[e.left].in_e[n];
                break;
              default:
                break;
            }
          if (gen) {
            e.in_e[n] = true;
            changed = true;
          }
        }
      }
      // U_n: generated from E_{n-1} by /\, \/, bounded quantifiers, forall,
      // and implications whose antecedent is in E_{n-1}.
      changed = true;
      while (changed) {
        changed = false;
        for (Entry& e : entries_) {
          if (e.in_u[n]) continue;
          bool gen = e.in_e[n - 1];
          if (!gen) switch (e.formula.kind()) {
              case FormulaKind::And:
              case FormulaKind::Or:
                gen = entries_[e.left].in_u[n] && entries_[e.right].in_u[n];
                break;
              case FormulaKind::BForall:
              case FormulaKind::BExists:
              case FormulaKind::Forall:
                gen = entries_[e.left].in_u[n];
                break;
              case FormulaKind::Implies:
                gen = entries_[e.left].in_e[n - 1] && entries_[e.right].in_u[n];
                break;
              default:
                break;
            }
          if (gen) {
            e.in_u[n] = true;
            changed = true;
          }
        }
      }
    }
    dirty_ = false;
  }

  std::uint64_t level(const Formula& f, HierarchyClass cls) {
    const int id = add_node(f);
    if (dirty_) saturate();
    const Entry& e = entries_[id];
    for (std::uint64_t n = 0; n <= kMaxLevel; ++n)
      if (cls == HierarchyClass::E ? e.in_e[n] : e.in_u[n]) return n;
    return kMaxLevel + 1;
  }

  std::vector<Entry> entries_;
  std::map<std::string, int> index_;
  bool dirty_ = true;
};

}  // namespace hfkit
