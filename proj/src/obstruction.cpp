#include "rmot/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "rmot/smith.hpp"

namespace rmot {

std::string MayGenerator::name() const { return "h" + std::to_string(i) + std::to_string(j); }

MayGenerator may_generator(int i, int j) {
    if (i < 1 || j < 0) throw std::invalid_argument("h_{i,j} needs i >= 1, j >= 0");
    MayGenerator g;
    g.i = i;
    g.j = j;
    g.may = i;
    const int e = (1 << i) - 1;
    if (j == 0) {
        g.stem = e - 1;
        g.weight = (1 << (i - 1)) - 1;
    } else {
        g.stem = (1 << j) * e - 1;
        g.weight = (1 << (j - 1)) * e;
    }
    return g;
}

std::vector<MayGenerator> MayPresentation::surviving() const {
    std::vector<MayGenerator> out;
    for (int i = 1; i <= i_max; ++i)
        for (int j = 0; j <= j_max; ++j)
            if (!kill.count({i, j})) out.push_back(may_generator(i, j));
    return out;
}

int scan_shift(ScanMode m) { return m == ScanMode::Existence ? 2 : 1; }
int scan_fmin(ScanMode m) { return m == ScanMode::Existence ? 3 : 2; }

ScanMode parse_mode(const std::string& s) {
    if (s == "existence") return ScanMode::Existence;
    if (s == "uniqueness") return ScanMode::Uniqueness;
    throw std::invalid_argument("unknown mode '" + s + "' (existence|uniqueness)");
}
std::string mode_str(ScanMode m) { return m == ScanMode::Existence ? "existence" : "uniqueness"; }

std::string Witness::monomial() const {
    std::string s;
    if (k) s = k == 1 ? "t" : "t^" + std::to_string(k);
    for (size_t a = 0; a < gens.size();) {
        size_t b = a;
        while (b < gens.size() && gens[b] == gens[a]) ++b;
        if (!s.empty()) s += " ";
        s += may_generator(gens[a].first, gens[a].second).name();
        if (b - a > 1) s += "^" + std::to_string(b - a);
        a = b;
    }
    return s;
}

namespace {

bool better(const Witness& a, const std::optional<Witness>& b) {
    if (!b) return true;
    if (a.f != b->f) return a.f < b->f;
    return a.gens < b->gens;
}

Witness make_witness(Bidegree target, int shift, std::vector<HIndex> gens) {
    std::sort(gens.begin(), gens.end());
    Witness wt;
    wt.target = target;
    wt.gens = gens;
    for (auto [i, j] : gens) {
        MayGenerator g = may_generator(i, j);
        wt.stem += g.stem;
        wt.weight += g.weight;
    }
    wt.f = static_cast<int>(gens.size());
    wt.i = wt.stem - (target.s - shift);
    // t has weight -1, so the monomial's weight is sum(weight) - k
    wt.k = wt.weight - (target.w + wt.i);
    wt.weight -= wt.k;
    return wt;
}

// Multisets (nondecreasing index sequences) over `pool` accepted by `keep`
// as a running prefix; `leaf` sees every accepted prefix.
void multisets(const std::vector<MayGenerator>& pool, size_t max_size,
               const std::function<bool(const std::vector<int>&)>& keep,
               const std::function<void(const std::vector<int>&)>& leaf) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        leaf(cur);
        if (cur.size() == max_size) return;
        for (size_t p = start; p < pool.size(); ++p) {
            cur.push_back(static_cast<int>(p));
            if (keep(cur)) rec(p);
            cur.pop_back();
        }
    };
    rec(0);
}

std::optional<Witness> scan_point(const std::vector<MayGenerator>& gens, Bidegree d, int shift, int fmin) {
    const int budget = d.coweight() - shift;
    const int target = d.s - shift;
    if (budget < 0) return std::nullopt;
    std::vector<MayGenerator> zero, pos;
    for (const auto& g : gens) {
        if (g.coweight() < 0) throw std::logic_error("negative coweight generator " + g.name());
        if (g.coweight() == 0) zero.push_back(g);
        else if (g.coweight() <= budget) pos.push_back(g);
    }
    int zmax = -1;
    for (const auto& g : zero) zmax = std::max(zmax, g.stem);

    auto cw = [&](const std::vector<int>& idx) {
        int c = 0;
        for (int p : idx) c += pos[p].coweight();
        return c;
    };
    auto stem = [&](const std::vector<int>& idx) {
        int c = 0;
        for (int p : idx) c += pos[p].stem;
        return c;
    };
    // Each positive-coweight factor costs at least 1, so |P| <= budget.
    const size_t pmax = static_cast<size_t>(budget);
    int best_f = -1;
    multisets(pos, pmax, [&](const std::vector<int>& idx) { return cw(idx) <= budget; },
              [&](const std::vector<int>& idx) {
                  const int n = static_cast<int>(idx.size()), st = stem(idx);
                  int f = -1;
                  if (zero.empty()) {
                      if (n >= fmin && st >= target) f = n;
                  } else if (zmax > 0) {
                      int need = std::max(0, target - st);
                      f = n + std::max({0, fmin - n, (need + zmax - 1) / zmax});
                  } else if (st >= target) {
                      f = std::max(n, fmin);
                  }
                  if (f >= 0 && (best_f < 0 || f < best_f)) best_f = f;
              });
    if (best_f < 0) return std::nullopt;

    // All multisets of size best_f inside the window; keep the least.
    std::optional<Witness> best;
    std::vector<MayGenerator> all = pos;
    all.insert(all.end(), zero.begin(), zero.end());
    std::sort(all.begin(), all.end(), [](const MayGenerator& a, const MayGenerator& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    multisets(all, static_cast<size_t>(best_f),
              [&](const std::vector<int>& idx) {
                  int c = 0;
                  for (int p : idx) c += all[p].coweight();
                  return c <= budget;
              },
              [&](const std::vector<int>& idx) {
                  if (static_cast<int>(idx.size()) != best_f) return;
                  int st = 0;
                  std::vector<HIndex> h;
                  for (int p : idx) {
                      st += all[p].stem;
                      h.push_back({all[p].i, all[p].j});
                  }
                  if (st < target) return;
                  Witness wt = make_witness(d, shift, h);
                  if (better(wt, best)) best = wt;
              });
    if (!best) throw std::logic_error("window_scan: padding bound not attained");
    return best;
}

void finish(ScanResult& r) {
    r.empty = true;
    for (const auto& p : r.points)
        if (p.witness) {
            r.empty = false;
            r.witness = p.witness;
            break;
        }
}

}  // namespace

ScanResult window_scan(const MayPresentation& e1, std::vector<Bidegree> D, ScanMode mode) {
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());
    const int shift = scan_shift(mode), fmin = scan_fmin(mode);
    const auto gens = e1.surviving();
    ScanResult r;
    int max_budget = -1;
    for (Bidegree d : D) max_budget = std::max(max_budget, d.coweight() - shift);
    // Coweight grows in i and j; the cheapest omitted generators sit just past the cutoff.
    int omitted = std::min({may_generator(e1.i_max + 1, 0).coweight(), may_generator(e1.i_max + 1, 1).coweight(),
                            may_generator(1, e1.j_max + 1).coweight()});
    r.sufficient = omitted > max_budget;
    if (!r.sufficient) r.note = "generator universe too small for coweight budget " + std::to_string(max_budget);
    for (Bidegree d : D) r.points.push_back({d, scan_point(gens, d, shift, fmin)});
    finish(r);
    return r;
}

ScanResult brute_force_scan(const MayPresentation& e1, std::vector<Bidegree> D, ScanMode mode, int f_max, int i_max) {
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());
    const int shift = scan_shift(mode), fmin = scan_fmin(mode);
    ScanResult r;
    r.note = "bounded: f <= " + std::to_string(f_max) + ", i <= " + std::to_string(i_max);
    std::vector<MayGenerator> gens = e1.surviving();
    for (Bidegree d : D) {
        PointVerdict pv{d, std::nullopt};
        for (int i = 0; i <= i_max; ++i) {
            const int S = d.s - shift + i, W = d.w + i;
            if (S < 0) continue;
            std::vector<MayGenerator> pool;
            for (const auto& g : gens)
                if (g.stem <= S) pool.push_back(g);
            multisets(pool, static_cast<size_t>(f_max),
                      [&](const std::vector<int>& idx) {
                          int st = 0;
                          for (int p : idx) st += pool[p].stem;
                          return st <= S;
                      },
                      [&](const std::vector<int>& idx) {
                          const int f = static_cast<int>(idx.size());
                          if (f < fmin) return;
                          int st = 0, wt = 0;
                          std::vector<HIndex> h;
                          for (int p : idx) {
                              st += pool[p].stem;
                              wt += pool[p].weight;
                              h.push_back({pool[p].i, pool[p].j});
                          }
                          // t^k lowers weight by k >= 0
                          if (st != S || wt < W) return;
                          Witness w = make_witness(d, shift, h);
                          if (better(w, pv.witness)) pv.witness = w;
                      });
        }
        r.points.push_back(pv);
    }
    finish(r);
    return r;
}

Instance obstruction_instance(const std::string& name) {
    Instance in;
    in.name = name;
    if (name == "a1") {
        in.e1.kill = {{1, 0}, {1, 1}, {2, 0}};
        in.D = {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 1}, {5, 2}, {6, 2}};
    } else if (name == "b1") {
        in.e1.kill = {{1, 0}, {1, 1}};
        in.D = {{0, 0}, {1, 0}, {2, 1}, {3, 1}};
    } else if (name == "z") {
        in.e1.kill = {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}};
        in.D = btilde_degree_set();
    } else {
        throw std::invalid_argument("unknown instance '" + name + "' (a1|b1|z)");
    }
    return in;
}

}  // namespace rmot
