#include "fap/dual.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fap/segments.hpp"

namespace fap {

std::string format_rat(const Rat& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw FapError(ErrorKind::MalformedLine, "bad rational '" + s + "'");
  }
}

Rat DualSolution::z_of(int edge_id) const {
  for (const auto& [id, val] : z)
    if (id == edge_id) return val;
  return Rat(0);
}

std::pair<bool, std::vector<DualViolation>> check_feasible(const Instance& inst,
                                                           const DualSolution& d) {
  const int n = inst.n();
  // one membership bitmap per stored set
  std::vector<std::vector<uint8_t>> member;
  member.reserve(d.y.size());
  for (const auto& [set, val] : d.y) {
    (void)val;
    std::vector<uint8_t> bm(n, 0);
    for (int v : set) {
      if (v < 0 || v >= n)
        throw FapError(ErrorKind::MalformedSet, "set vertex out of range");
      if (bm[v]) throw FapError(ErrorKind::MalformedSet, "set repeats a vertex");
      bm[v] = 1;
    }
    if (set.empty() || static_cast<int>(set.size()) >= n)
      throw FapError(ErrorKind::MalformedSet, "sets must be nonempty proper subsets");
    member.push_back(std::move(bm));
  }
  std::vector<DualViolation> violations;
  for (int id = 0; id < inst.m(); ++id) {
    const Edge& e = inst.edge(id);
    Rat lhs(0);
    for (size_t i = 0; i < d.y.size(); ++i)
      if (member[i][e.u] != member[i][e.v]) lhs += d.y[i].second;
    Rat rhs = Rat(e.cost) + d.z_of(id);
    if (lhs > rhs) violations.push_back({id, lhs, rhs});
  }
  return {violations.empty(), violations};
}

Rat objective(const DualSolution& d) {
  Rat total(0);
  for (const auto& [set, val] : d.y) {
    (void)set;
    total += Rat(2) * val;
  }
  for (const auto& [id, val] : d.z) {
    (void)id;
    total -= val;
  }
  return total;
}

DualityReport weak_duality_check(const Instance& inst, const DualSolution& d,
                                 const Solution& sol, Mode mode) {
  if (!check_feasible(inst, d).first)
    throw FapError(ErrorKind::PreconditionUnmet, "dual assignment is infeasible");
  if (!is_feasible(sol, mode))
    throw FapError(ErrorKind::PreconditionUnmet, "solution is infeasible");
  DualityReport rep;
  rep.dual_value = objective(d);
  rep.solution_cost = sol.cost();
  rep.holds = rep.dual_value <= Rat(rep.solution_cost);
  return rep;
}

DualSolution singleton_dual(const Instance& inst, const Solution& sol, Mode mode,
                            std::vector<DualClamp>* clamps) {
  const int n = inst.n();
  std::vector<Rat> y(n, Rat(0));
  std::vector<Rat> z(inst.m(), Rat(0));

  std::vector<int> degree(n, 0);
  for (int id = 0; id < inst.m(); ++id) {
    if (!sol.contains(id)) continue;
    ++degree[inst.edge(id).u];
    ++degree[inst.edge(id).v];
  }

  std::vector<uint8_t> charged_side(n, 0);
  for (const Segment& seg : segments_of(sol, mode)) {
    if (!seg.special) continue;
    auto [sv1, sv2] = seg.side_vertices();
    std::vector<int> sides = {sv1};
    if (sv2 != sv1) sides.push_back(sv2);
    for (int sv : sides) {
      charged_side[sv] = 1;
      y[sv] = Rat(1);
      for (int id : seg.edges) {
        const Edge& e = inst.edge(id);
        if (e.cost == 0 && (e.u == sv || e.v == sv)) z[id] += Rat(1);
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (degree[v] >= 3 || charged_side[v] || degree[v] == 0) continue;
    // degree-2 vertex that is not a charged side vertex
    int zero_edge = -1;
    bool has_unit = false;
    for (auto [w, id] : inst.adjacency()[v]) {
      (void)w;
      if (!sol.contains(id)) continue;
      if (inst.edge(id).cost == 1)
        has_unit = true;
      else if (zero_edge == -1)
        zero_edge = id;
    }
    if (!has_unit) continue;  // y stays 0
    y[v] = Rat(1, 2);
    if (zero_edge != -1 && z[zero_edge] == Rat(0)) z[zero_edge] += Rat(1, 2);
  }

  // clamp until every edge constraint holds; each pass lowers some y on the
  // {1, 1/2, 0} grid, so this terminates
  for (;;) {
    int bad_edge = -1;
    Rat lhs, rhs;
    for (int id = 0; id < inst.m(); ++id) {
      const Edge& e = inst.edge(id);
      lhs = y[e.u] + y[e.v];
      rhs = Rat(e.cost) + z[id];
      if (lhs > rhs) {
        bad_edge = id;
        break;
      }
    }
    if (bad_edge == -1) break;
    const Edge& e = inst.edge(bad_edge);
    int pick;
    if (y[e.u] != y[e.v])
      pick = y[e.u] > y[e.v] ? e.u : e.v;
    else
      pick = std::max(e.u, e.v);
    Rat other = y[e.u == pick ? e.v : e.u];
    Rat target = rhs - other;
    if (target < Rat(0)) target = Rat(0);
    // round down to the grid
    Rat to(0);
    for (Rat cand : {Rat(1), Rat(1, 2), Rat(0)})
      if (cand <= target && cand < y[pick]) {
        to = cand;
        break;
      }
    if (clamps) clamps->push_back({pick, y[pick], to, bad_edge});
    y[pick] = to;
  }

  DualSolution d;
  for (int v = 0; v < n; ++v)
    if (y[v] > Rat(0)) d.y.push_back({{v}, y[v]});
  for (int id = 0; id < inst.m(); ++id)
    if (z[id] > Rat(0)) d.z.push_back({id, z[id]});
  return d;
}

DualSolution parse_dual(const Instance& inst, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::map<std::vector<int>, Rat> ys;
  std::map<int, Rat> zs;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](ErrorKind kind, const std::string& what) {
      throw FapError(kind, "line " + std::to_string(lineno) + ": " + what);
    };
    if (tag == "Y") {
      std::string setspec, ratspec;
      if (!(ls >> setspec >> ratspec)) fail(ErrorKind::MalformedLine, "Y needs a set and a value");
      std::vector<int> set;
      std::istringstream ss(setspec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          set.push_back(std::stoi(item));
        } catch (...) {
          fail(ErrorKind::MalformedSet, "bad vertex '" + item + "'");
        }
      }
      std::sort(set.begin(), set.end());
      if (set.empty() || static_cast<int>(set.size()) >= inst.n() ||
          std::adjacent_find(set.begin(), set.end()) != set.end() || set.front() < 0 ||
          set.back() >= inst.n())
        fail(ErrorKind::MalformedSet, "sets must be nonempty proper subsets without repeats");
      Rat val = parse_rat(ratspec);
      if (val < Rat(0)) fail(ErrorKind::MalformedLine, "negative y value");
      if (val > Rat(0)) ys[set] += val;
      if (ys.size() > 10000) fail(ErrorKind::MalformedSet, "more than 10000 stored sets");
    } else if (tag == "Z") {
      int u, v;
      std::string ratspec;
      if (!(ls >> u >> v >> ratspec)) fail(ErrorKind::MalformedLine, "Z needs u, v and a value");
      int id = inst.find_edge(u, v);
      if (id == -1) fail(ErrorKind::MalformedLine, "no such edge");
      Rat val = parse_rat(ratspec);
      if (val < Rat(0)) fail(ErrorKind::MalformedLine, "negative z value");
      if (val > Rat(0)) zs[id] += val;
    } else {
      fail(ErrorKind::MalformedLine, "unknown record '" + tag + "'");
    }
  }
  DualSolution d;
  for (auto& [set, val] : ys) d.y.push_back({set, val});
  std::sort(d.y.begin(), d.y.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                            : a.first < b.first;
  });
  for (auto& [id, val] : zs) d.z.push_back({id, val});
  return d;
}

std::string serialize_dual(const Instance& inst, const DualSolution& d) {
  std::ostringstream out;
  for (const auto& [set, val] : d.y) {
    out << "Y ";
    for (size_t i = 0; i < set.size(); ++i) {
      if (i) out << ',';
      out << set[i];
    }
    out << ' ' << format_rat(val) << '\n';
  }
  for (const auto& [id, val] : d.z) {
    const Edge& e = inst.edge(id);
    out << "Z " << e.u << ' ' << e.v << ' ' << format_rat(val) << '\n';
  }
  return out.str();
}

}  // namespace fap
