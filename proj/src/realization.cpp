#include "cubicdyn/realization.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cubicdyn {

std::string Label::str() const {
  switch (kind) {
    case PointKind::Blown: return "blown(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case PointKind::IndPlus: return "ind_plus(" + std::to_string(i) + ")";
    case PointKind::IndMinus: return "ind_minus(" + std::to_string(i) + ")";
    case PointKind::CritImage: return "crit_image(" + std::to_string(i) + ")";
    case PointKind::CritPreimage: return "crit_preimage(" + std::to_string(i) + ")";
    case PointKind::Fixed: return "fixed";
  }
  return "?";
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::Realizable: return "realizable";
    case Kind::Degenerate: return "degenerate";
    case Kind::NoDelta: return "no_delta";
  }
  return "?";
}

std::array<FieldElem, 3> indeterminacy_parameters(const OrbitData& od, const ContextPtr& ctx) {
  FieldElem d = FieldElem::generator(ctx);
  FieldElem one = FieldElem::from_rat(1, ctx);
  auto checked_inverse = [&](const FieldElem& x) {
    if (nf_is_zero(x)) throw std::domain_error("indeterminacy_parameters: vanishing denominator");
    return x.inverse();
  };
  std::array<FieldElem, 3> t;
  for (int i = 1; i <= 3; ++i) {
    int j = od.sigma(i);
    if (j == i) {
      t[i - 1] = checked_inverse(one - d.pow(od.len(i)));
    } else if (od.sigma(j) == i) {
      t[i - 1] = (one + d.pow(od.len(j))) * checked_inverse(one - d.pow(od.len(i) + od.len(j)));
    } else {
      int k = od.sigma(j);
      t[i - 1] = (one + d.pow(od.len(k)) + d.pow(od.len(j) + od.len(k))) *
                 checked_inverse(one - d.pow(od.total()));
    }
  }
  return t;
}

const MarkedPoint& MarkedConfig::at(const Label& l) const {
  for (const auto& p : points)
    if (p.label == l) return p;
  throw std::out_of_range("MarkedConfig: no point " + l.str());
}

FieldElem MarkedConfig::plus_iterate(int i, int k) const {
  FieldElem base = param(Label::ind_plus(i));
  FieldElem d = FieldElem::generator(params.ctx);
  return k >= 0 ? base * d.pow(k) : base * d.inverse().pow(-k);
}

int MarkedConfig::blown_count() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(),
                                        [](const MarkedPoint& p) { return p.label.kind == PointKind::Blown; }));
}

int compare_params(const MarkedPoint& a, const MarkedPoint& b) {
  if (a.approx.hi < b.approx.lo) return -1;
  if (b.approx.hi < a.approx.lo) return 1;
  return nf_sign(a.param - b.param);
}

namespace {

std::vector<std::vector<size_t>> sorted_groups(const MarkedConfig& cfg) {
  std::vector<size_t> idx(cfg.points.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return compare_params(cfg.points[a], cfg.points[b]) < 0;
  });
  std::vector<std::vector<size_t>> groups;
  for (size_t k : idx) {
    if (!groups.empty() && compare_params(cfg.points[groups.back().front()], cfg.points[k]) == 0)
      groups.back().push_back(k);
    else
      groups.push_back({k});
  }
  return groups;
}

}  // namespace

MarkedConfig marked_config(const OrbitData& od) {
  auto delta = dynamical_degree(od);
  if (!delta) throw NoDelta("no dynamical degree > 1 for " + format_od(od));
  MarkedConfig cfg;
  cfg.od = od;
  cfg.params.delta = *delta;
  cfg.params.ctx = delta_context(od, *delta);
  cfg.params.t = indeterminacy_parameters(od, cfg.params.ctx);
  const ContextPtr& ctx = cfg.params.ctx;
  FieldElem d = FieldElem::generator(ctx);
  FieldElem dinv = d.inverse();
  auto t = [&](int i) { return cfg.params.t[i - 1]; };

  auto add = [&](Label l, FieldElem v) { cfg.points.push_back({l, std::move(v), {}}); };
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= od.len(i); ++j) add(Label::blown(i, j), t(i) * d.pow(j - 1));
  for (int i = 1; i <= 3; ++i) add(Label::ind_minus(i), t(i));
  for (int i = 1; i <= 3; ++i) {
    int s = od.sigma(i);
    add(Label::ind_plus(s), t(i) * d.pow(od.len(i) - 1));
    add(Label::crit_image(s), t(i) * d.pow(od.len(i)));
  }
  for (int i = 1; i <= 3; ++i) add(Label::crit_preimage(i), t(i) * dinv);
  add(Label::fixed(), FieldElem::from_rat(0, ctx));

  for (auto& p : cfg.points) p.approx = nf_interval(p.param, 64);
  auto groups = sorted_groups(cfg);
  for (int bits = 64;; bits *= 2) {
    for (auto& p : cfg.points) p.approx = nf_interval(p.param, bits);
    bool separated = true;
    for (size_t g = 0; g + 1 < groups.size() && separated; ++g)
      for (size_t a : groups[g])
        for (size_t b : groups[g + 1])
          if (!(cfg.points[a].approx.hi < cfg.points[b].approx.lo)) separated = false;
    if (separated) break;
    if (bits > (1 << 14)) throw NumericFailure("marked_config: intervals fail to separate");
  }
  return cfg;
}

std::vector<std::vector<Label>> ordering(const MarkedConfig& cfg) {
  std::vector<std::vector<Label>> out;
  for (const auto& g : sorted_groups(cfg)) {
    std::vector<Label> labels;
    for (size_t k : g) labels.push_back(cfg.points[k].label);
    out.push_back(std::move(labels));
  }
  return out;
}

Verdict realizability(const MarkedConfig& cfg) {
  Verdict v;
  v.kind = Verdict::Kind::Realizable;
  std::vector<const MarkedPoint*> blown;
  for (const auto& p : cfg.points)
    if (p.label.kind == PointKind::Blown) blown.push_back(&p);
  for (size_t a = 0; a < blown.size(); ++a)
    for (size_t b = a + 1; b < blown.size(); ++b)
      if (compare_params(*blown[a], *blown[b]) == 0) v.coincidences.push_back({blown[a]->label, blown[b]->label});
  if (!v.coincidences.empty()) v.kind = Verdict::Kind::Degenerate;
  return v;
}

Verdict realizability(const OrbitData& od) {
  try {
    return realizability(marked_config(od));
  } catch (const NoDelta&) {
    return Verdict{};
  }
}

std::string ChainTerm::str() const {
  std::string p = "p" + std::to_string(i) + "+";
  if (k == 0) return p;
  if (k == 1) return "f_C(" + p + ")";
  return "f_C^" + std::to_string(k) + "(" + p + ")";
}

namespace {

struct TableRow {
  int table;
  std::string name;
  std::function<bool(int, int, int)> guard;
  std::vector<ChainTerm> chain;
  std::string rel;  // rel[k] relates chain[k] and chain[k+1]: '<' or '='
  bool degenerate = false;
  int specificity = 0;  // among overlapping rows only the most specific ones decide
};

// All rows share the frame f_C(p2+) ... p2+.
TableRow row(int table, int specificity, std::string name, std::function<bool(int, int, int)> g, ChainTerm mid1,
             ChainTerm mid2, std::string rel = "<<<") {
  return {table, std::move(name), std::move(g), {{2, 1}, mid1, mid2, {2, 0}}, std::move(rel), false, specificity};
}

TableRow degenerate_row(int table, std::string name, std::function<bool(int, int, int)> g) {
  return {table, std::move(name), std::move(g), {}, "", true, 9};
}

const std::vector<TableRow>& cyclic_rows() {
  static const std::vector<TableRow> rows = {
      row(1, 2, "n1=n2=1", [](int a, int b, int) { return a == 1 && b == 1; }, {1, -1}, {3, 2}, "<<="),
      row(1, 2, "n1=1, n2=2", [](int a, int b, int) { return a == 1 && b == 2; }, {1, -1}, {3, 2}),
      row(1, 2, "n1=1, n3=2", [](int a, int, int c) { return a == 1 && c == 2; }, {1, -1}, {3, -2}),
      row(1, 1, "n1=1, n2+1=n3", [](int a, int b, int c) { return a == 1 && b + 1 == c; }, {1, -1}, {3, 0}),
      row(1, 1, "n1=1, 3<=n2<n3-1", [](int a, int b, int c) { return a == 1 && 3 <= b && b < c - 1; }, {3, 1},
          {1, -1}),
      row(1, 1, "n1=1, 3<=n3<=n2-1", [](int a, int b, int c) { return a == 1 && 3 <= c && c <= b - 1; }, {3, 0},
          {1, -1}),
      row(1, 0, "2<=n1<=n2<n3", [](int a, int b, int c) { return 2 <= a && a <= b && b < c; }, {3, 1}, {1, 0}),
      row(1, 0, "2<=n1<=n3<=n2", [](int a, int b, int c) { return 2 <= a && a <= c && c <= b; }, {1, 0}, {3, 0}),
      degenerate_row(1, "n1=n2=n3, n1=1 n2=n3, n1=n2=2, n1=n3=2", [](int a, int b, int c) {
        return (a == b && b == c) || (a == 1 && b == c) || (a == 2 && b == 2) || (a == 2 && c == 2);
      }),
  };
  return rows;
}

const std::vector<TableRow>& id_rows() {
  static const std::vector<TableRow> rows = {
      row(2, 3, "(2,3,7)", [](int a, int b, int c) { return a == 2 && b == 3 && c == 7; }, {3, 4}, {1, -2}),
      row(2, 3, "(2,3,8)", [](int a, int b, int c) { return a == 2 && b == 3 && c == 8; }, {1, -1}, {3, 3}),
      row(2, 2, "(2,3,n3), n3>=9", [](int a, int b, int c) { return a == 2 && b == 3 && c >= 9; }, {3, 3}, {1, -1}),
      row(2, 3, "(2,4,5)", [](int a, int b, int c) { return a == 2 && b == 4 && c == 5; }, {1, -1}, {3, 1}),
      row(2, 1, "(2,n2,n3), 4<=n2, 6<=n3", [](int a, int b, int c) { return a == 2 && 4 <= b && 6 <= c; }, {3, 1},
          {1, -1}),
      row(2, 0, "3<=n1<n2<n3", [](int a, int b, int c) { return 3 <= a && a < b && b < c; }, {3, 1}, {1, 0}),
      degenerate_row(2, "n_i=n_j", [](int a, int b, int c) { return a == b || b == c || a == c; }),
  };
  return rows;
}

const std::vector<TableRow>& swap_rows() {
  static const std::vector<std::pair<int, int>> special = {{3, 6}, {3, 7}, {3, 8}, {4, 5}};
  auto is_special = [](int a, int b) {
    return std::find(special.begin(), special.end(), std::make_pair(a, b)) != special.end();
  };
  static const std::vector<TableRow> rows = {
      row(3, 3, "(1,8,2)", [](int a, int b, int c) { return a == 1 && b == 8 && c == 2; }, {3, -4}, {1, -2}),
      row(3, 2, "(1,n2,2), n2>=9", [](int a, int b, int c) { return a == 1 && b >= 9 && c == 2; }, {3, -3}, {1, -2}),
      row(3, 3, "(1,4,6)", [](int a, int b, int c) { return a == 1 && b == 4 && c == 6; }, {3, 4}, {1, -1}),
      row(3, 2, "(1,4,n3), n3>=7", [](int a, int b, int c) { return a == 1 && b == 4 && c >= 7; }, {3, 3}, {1, -1}),
      row(3, 1, "(1,n2,n3), n3>=n2-1>=4", [](int a, int b, int c) { return a == 1 && c >= b - 1 && b - 1 >= 4; },
          {3, 1}, {1, -1}),
      row(3, 1, "(1,n2,n3), 4<=n3<=n2-3, n2>=5",
          [](int a, int b, int c) { return a == 1 && 4 <= c && c <= b - 3 && b >= 5; }, {3, 0}, {1, -1}),
      row(3, 0, "2<=n1<n2<=n3", [](int a, int b, int c) { return 2 <= a && a < b && b <= c; }, {3, 1}, {1, 0}),
      row(3, 0, "2<=n1<n3<n2", [](int a, int b, int c) { return 2 <= a && a < c && c < b; }, {1, 0}, {3, 0}),
      row(3, 0, "3<=n3<=n1<n2", [](int a, int b, int c) { return 3 <= c && c <= a && a < b; }, {3, 0}, {1, 0}),
      row(3, 1, "(n1,n2,2), n1>=3, (n1,n2) not in {(3,6),(3,7),(3,8),(4,5)}",
          [is_special](int a, int b, int c) { return c == 2 && a >= 3 && !is_special(a, b); }, {3, -1}, {1, 0}),
      row(3, 2, "(2,n2,2), n2>=8", [](int a, int b, int c) { return a == 2 && b >= 8 && c == 2; }, {3, -2}, {1, -1}),
      row(3, 3, "(2,3,6)", [](int a, int b, int c) { return a == 2 && b == 3 && c == 6; }, {1, 0}, {3, 3}),
      row(3, 3, "(2,3,7)", [](int a, int b, int c) { return a == 2 && b == 3 && c == 7; }, {3, 3}, {1, 0}),
      row(3, 2, "(2,3,n3), n3>=8", [](int a, int b, int c) { return a == 2 && b == 3 && c >= 8; }, {1, 0}, {3, 2}),
      row(3, 3, "(2,7,2)", [](int a, int b, int c) { return a == 2 && b == 7 && c == 2; }, {3, -3}, {1, -1}),
      row(3, 3, "n3=2, (n1,n2) in {(3,6),(3,7),(3,8),(4,5)}",
          [is_special](int a, int b, int c) { return c == 2 && is_special(a, b); }, {1, 0}, {3, -2}),
      [] {
        TableRow r = row(3, 2, "(1,n2,3)", [](int a, int, int c) { return a == 1 && c == 3; }, {3, 0}, {1, -1}, "=<<");
        r.degenerate = true;
        return r;
      }(),
      [] {
        TableRow r =
            row(3, 2, "(1,n2,n2-2)", [](int a, int b, int c) { return a == 1 && c == b - 2; }, {1, -1}, {3, 0}, "<=<");
        r.degenerate = true;
        return r;
      }(),
      degenerate_row(3, "n1=n2", [](int a, int b, int) { return a == b; }),
  };
  return rows;
}

std::string chain_string(const TableRow& r) {
  std::string s;
  for (size_t k = 0; k < r.chain.size(); ++k) {
    if (k) s += r.rel[k - 1] == '<' ? " < " : " = ";
    s += r.chain[k].str();
  }
  return s;
}

}  // namespace

TableClassification classify_table_row(const OrbitData& od) {
  TableClassification out;
  const std::vector<TableRow>* rows = nullptr;
  switch (od.kind()) {
    case SigmaKind::Cycle123: rows = &cyclic_rows(); break;
    case SigmaKind::Id: rows = &id_rows(); break;
    case SigmaKind::Swap12: rows = &swap_rows(); break;
  }
  std::optional<MarkedConfig> cfg;
  try {
    cfg = marked_config(od);
  } catch (const NoDelta&) {
    out.reason = "no_delta";
    return out;
  }
  int top = -1;
  for (const auto& r : *rows)
    if (r.guard(od.n1(), od.n2(), od.n3())) top = std::max(top, r.specificity);
  for (const auto& r : *rows) {
    if (!r.guard(od.n1(), od.n2(), od.n3())) continue;
    RowCheck rc;
    rc.decisive = r.specificity == top;
    rc.table = r.table;
    rc.row = r.name;
    rc.degenerate_row = r.degenerate;
    if (r.chain.empty()) {
      Verdict v = realizability(*cfg);
      rc.passed = v.kind == Verdict::Kind::Degenerate;
      rc.detail = "verdict " + v.str();
    } else {
      std::ostringstream msg;
      msg << chain_string(r);
      rc.passed = true;
      for (size_t k = 0; k + 1 < r.chain.size(); ++k) {
        FieldElem a = cfg->plus_iterate(r.chain[k].i, r.chain[k].k);
        FieldElem b = cfg->plus_iterate(r.chain[k + 1].i, r.chain[k + 1].k);
        int s = nf_sign(b - a);
        bool ok = r.rel[k] == '<' ? s > 0 : s == 0;
        if (!ok) {
          rc.passed = false;
          msg << "; fails between " << r.chain[k].str() << " and " << r.chain[k + 1].str() << " (sign "
              << s << ")";
        }
      }
      rc.detail = msg.str();
    }
    out.rows.push_back(std::move(rc));
  }
  out.covered = !out.rows.empty();
  out.passed = out.covered;
  for (const auto& rc : out.rows)
    if (rc.decisive && !rc.passed) out.passed = false;
  if (!out.covered) out.reason = "uncovered";
  return out;
}

}  // namespace cubicdyn
