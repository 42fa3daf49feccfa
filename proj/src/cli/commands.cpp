#include <CLI11.hpp>
#include <json.hpp>

#include <memory>
#include <optional>
#include <sstream>

#include "ppcount/cli.hpp"
#include "ppcount/conjugacy.hpp"
#include "ppcount/enumeration.hpp"
#include "ppcount/errors.hpp"
#include "ppcount/lang.hpp"
#include "ppcount/oracle.hpp"
#include "ppcount/published.hpp"

namespace ppcount::cli {

namespace {

using nlohmann::json;

/// Struts beyond this are not brute-forced by `enumerate`.
constexpr std::uint64_t kEnumerateOracleStrutCap = 2'000'000;

struct CommonOptions {
  std::string format = "human";
  std::uint64_t cap = 0;  // 0: default / PPCOUNT_CAP
};

Limits limits_from(const CommonOptions& o) {
  Limits l = Limits::from_environment();
  if (o.cap) l.group_order_cap = o.cap;
  return l;
}

std::string csv_subset(const IndexSet& s) {
  if (s.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ";" : "") + std::to_string(s[i]);
  return out;
}

json subset_json(const IndexSet& s) { return json(s); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Row id usable as a CSV cell: s12-s13, quasi-s12, empty-empty.
std::string row_id(const TableRow& row) {
  auto part = [](const IndexSet& s) {
    if (s.empty()) return std::string("empty");
    std::string out = "s";
    for (int i : s) out += std::to_string(i);
    return out;
  };
  if (row.kind == RowKind::Quasi) return "quasi-" + part(row.I);
  return part(row.I) + "-" + part(row.J);
}

std::uint64_t strut_total(const GroupDescriptor& g, CountingContext& ctx, const OrbitType& ot, Convention conv) {
  auto points = [&](const IndexSet& s) {
    std::uint64_t n = g.order() / ctx.subgroup_order(s);
    if (conv == Convention::Lang && s.empty()) n /= 2;
    return n;
  };
  const std::uint64_t a = points(ot.I);
  if (ot.homoorbital()) return a * (a - 1) / 2;
  return a * points(ot.J);
}

/// Differences between a computed report and values printed for the same orbit type.
std::vector<std::string> printed_discrepancies(const CountReport& r) {
  std::vector<std::string> out;
  const auto& ot = r.orbit_type;
  const std::string name = ot.group.name();
  auto note = [&](const std::string& what, std::int64_t printed, std::uint64_t computed) {
    if (printed != static_cast<std::int64_t>(computed))
      out.push_back("printed " + what + " = " + std::to_string(printed) + ", computed " + std::to_string(computed));
  };
  if (name == "A4" && ot.I == IndexSet{1, 2, 3} && ot.J == IndexSet{1, 2, 4} && r.convention == Convention::Full)
    note("worked-example P", published::kExampleAlpha4P, r.p_count);
  if (name == "H3" && ot.I == IndexSet{1, 2} && ot.J == IndexSet{1, 2}) {
    note("worked-example P", published::kExampleH3P, r.p_count);
    note("worked-example U", published::kExampleH3U, r.univalent);
  }
  if (name == "B3" && ot.I.empty() && ot.J.empty()) {
    note("worked-example U", published::kExampleBeta3U, r.univalent);
    note("worked-example P (displayed sum)", published::kExampleBeta3DisplayedP, r.p_count);
    note("worked-example P (stated)", published::kExampleBeta3StatedP, r.p_count);
  }
  if (r.convention == Convention::Lang) {
    const auto& cols = published::rank3_columns();
    const auto rows = rank3_rows();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (parse_group_spec(cols[c].group_spec).name() != name) continue;
      std::size_t orbit_row = 0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].kind != RowKind::Orbit) continue;
        if (rows[k].I == ot.I && rows[k].J == ot.J) {
          note("table raw cell", published::rank3_raw()[k][c], r.strut_orbits);
          note("table univalent cell", published::rank3_univalent()[orbit_row][c], r.univalent);
          note("table non-univalent cell", published::rank3_non_univalent()[orbit_row][c], r.p_count);
        }
        ++orbit_row;
      }
    }
  }
  return out;
}

json report_json(const CountReport& r) {
  json j;
  j["group"] = r.orbit_type.group.name();
  j["I"] = subset_json(r.orbit_type.I);
  j["J"] = subset_json(r.orbit_type.J);
  j["strut_orbits"] = r.strut_orbits;
  j["univalent"] = r.univalent;
  j["P"] = r.p_count;
  j["quasi_homoorbital"] = r.quasi_homoorbital ? json(*r.quasi_homoorbital) : json(nullptr);
  j["convention"] = to_string(r.convention);
  j["discrepancies"] = r.discrepancies;
  return j;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions : CommonOptions {
  std::string group, I = "empty", J = "empty", convention = "full";
};

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Limits limits = limits_from(o);
  const GroupDescriptor g = parse_group_spec(o.group);
  if (g.order() > limits.group_order_cap) throw CapExceeded(g.order(), limits.group_order_cap, "group " + g.name());
  const OrbitType ot = make_orbit_type(g, parse_index_list(o.I), parse_index_list(o.J));
  const Convention conv = parse_convention(o.convention);

  CountingContext ctx(g, limits);
  CountReport r = ctx.count(ot, conv);
  std::string oracle_line = "skipped (too many struts)";
  if (strut_total(g, ctx, ot, conv) <= kEnumerateOracleStrutCap) {
    const auto oc = oracle_counts(g, ot, conv, limits);
    const bool match = oc.strut_orbits == r.strut_orbits && oc.univalent == r.univalent;
    oracle_line = std::to_string(oc.strut_orbits) + " orbits, " + std::to_string(oc.univalent) + " univalent (" +
                  (match ? "match" : "MISMATCH") + ")";
    if (!match)
      r.discrepancies.push_back("oracle: " + std::to_string(oc.strut_orbits) + " orbits, " +
                                std::to_string(oc.univalent) + " univalent");
  }
  for (auto& d : printed_discrepancies(r)) r.discrepancies.push_back(std::move(d));

  if (format == Format::Json) {
    out << report_json(r).dump(2) << "\n";
    return kOk;
  }
  const std::string quasi = r.quasi_homoorbital ? std::to_string(*r.quasi_homoorbital) : "-";
  if (format == Format::Csv) {
    TextTable t{"", {"group", "I", "J", "strut_orbits", "univalent", "P", "quasi_homoorbital", "convention"}, {}};
    t.rows.push_back({g.name(), csv_subset(ot.I), csv_subset(ot.J), std::to_string(r.strut_orbits),
                      std::to_string(r.univalent), std::to_string(r.p_count), quasi, to_string(conv)});
    out << render(t, format);
    return kOk;
  }
  TextTable t{"Orbit type " + ot.name(), {"quantity", "value"}, {}};
  t.rows = {{"convention", to_string(conv)},
            {"strut orbits", std::to_string(r.strut_orbits)},
            {"univalent", std::to_string(r.univalent)},
            {"P", std::to_string(r.p_count)},
            {"quasi-homoorbital", quasi},
            {"oracle", oracle_line}};
  if (!r.reason.empty()) t.rows.push_back({"reason", r.reason});
  if (r.discrepancies.empty()) t.rows.push_back({"discrepancies", "none"});
  for (const auto& d : r.discrepancies) t.rows.push_back({"discrepancy", d});
  out << render(t, format);
  return kOk;
}

// ---------------------------------------------------------------- table

struct TableOptions : CommonOptions {
  std::vector<std::string> groups;
  std::string convention = "lang";
};

int cmd_table(const TableOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Limits limits = limits_from(o);
  std::vector<GroupDescriptor> groups;
  for (const auto& s : o.groups) groups.push_back(parse_group_spec(s));
  if (groups.empty()) groups = default_rank3_groups();
  for (const auto& g : groups)
    if (g.order() > limits.group_order_cap) throw CapExceeded(g.order(), limits.group_order_cap, "group " + g.name());
  const Convention conv = parse_convention(o.convention);
  const Rank3Tables t = rank3_tables(groups, conv, limits);

  // Printed values only exist for the default column set under Lang's convention.
  std::vector<published::CellDiscrepancy> diffs;
  const auto defaults = default_rank3_groups();
  bool comparable = conv == Convention::Lang && groups.size() == defaults.size();
  for (std::size_t i = 0; comparable && i < groups.size(); ++i) comparable = groups[i] == defaults[i];
  if (comparable) diffs = published::compare_rank3(t);
  auto printed = [&](const std::string& table, const std::string& row, std::size_t col) -> std::optional<std::uint64_t> {
    const auto& heading = published::rank3_columns()[col].heading;
    for (const auto& d : diffs)
      if (d.table == table && d.row == row && d.column == heading) return d.printed;
    return std::nullopt;
  };

  struct Section {
    std::string key, title;
    const std::vector<std::uint64_t> Rank3Column::*values;
    std::uint64_t Rank3Column::*total;
    bool with_quasi;
  };
  const std::vector<Section> sections{
      {"raw", "All strut orbits", &Rank3Column::raw, &Rank3Column::raw_total, true},
      {"univalent", "Univalent", &Rank3Column::univalent, &Rank3Column::univalent_total, false},
      {"non-univalent", "Non-univalent", &Rank3Column::non_univalent, &Rank3Column::non_univalent_total, false},
  };

  if (format == Format::Json) {
    json j;
    j["convention"] = to_string(conv);
    for (const auto& g : groups) j["groups"].push_back(g.name());
    for (const auto& s : sections) {
      json rows = json::array();
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (!s.with_quasi && t.rows[r].kind == RowKind::Quasi) continue;
        json row{{"row", row_id(t.rows[r])}, {"values", json::array()}};
        for (const auto& c : t.columns) row["values"].push_back((c.*s.values)[r]);
        rows.push_back(row);
      }
      json totals = json::array();
      for (const auto& c : t.columns) totals.push_back(c.*s.total);
      j["tables"][s.key] = {{"rows", rows}, {"totals", totals}};
    }
    j["raw_total"] = t.raw_total();
    j["univalent_total"] = t.univalent_total();
    j["non_univalent_total"] = t.non_univalent_total();
    j["discrepancies"] = json::array();
    for (const auto& d : diffs) j["discrepancies"].push_back(d.describe());
    out << j.dump(2) << "\n";
    return kOk;
  }

  if (format == Format::Csv) {
    TextTable csv{"", {"table", "row"}, {}};
    for (const auto& g : groups) csv.headers.push_back(g.name());
    for (const auto& s : sections) {
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (!s.with_quasi && t.rows[r].kind == RowKind::Quasi) continue;
        std::vector<std::string> row{s.key, row_id(t.rows[r])};
        for (const auto& c : t.columns) row.push_back(std::to_string((c.*s.values)[r]));
        csv.rows.push_back(row);
      }
      std::vector<std::string> row{s.key, "total"};
      for (const auto& c : t.columns) row.push_back(std::to_string(c.*s.total));
      csv.rows.push_back(row);
    }
    out << render(csv, format);
    return kOk;
  }

  for (const auto& s : sections) {
    TextTable tt{s.title + " (" + to_string(conv) + " convention)", {"orbit type"}, {}};
    for (const auto& g : groups) tt.headers.push_back(g.name());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (!s.with_quasi && t.rows[r].kind == RowKind::Quasi) continue;
      std::vector<std::string> row{t.rows[r].label()};
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        std::string cell = std::to_string((t.columns[c].*s.values)[r]);
        if (auto p = printed(s.key, t.rows[r].label(), c)) cell += " *(" + std::to_string(*p) + ")";
        row.push_back(cell);
      }
      tt.rows.push_back(row);
    }
    std::vector<std::string> total{"total"};
    std::uint64_t grand = 0;
    for (const auto& c : t.columns) {
      total.push_back(std::to_string(c.*s.total));
      grand += c.*s.total;
    }
    tt.rows.push_back(total);
    out << render(tt, format) << "grand total: " << grand << "\n\n";
  }
  if (comparable) {
    out << "Cells marked *(n) differ from the printed value n. " << diffs.size() << " difference(s):\n";
    for (const auto& d : diffs) out << "  " << d.describe() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- classes

struct ClassesOptions : CommonOptions {
  std::string group;
  std::optional<std::string> I;
};

int cmd_classes(const ClassesOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Limits limits = limits_from(o);
  const GroupDescriptor g = parse_group_spec(o.group);
  std::optional<IndexSet> I;
  if (o.I) I = normalize_subset(g, parse_index_list(*o.I));
  CountingContext ctx(g, limits);

  TextTable t{"Conjugacy classes of " + g.name(), {"label", "representative", "class_size", "centralizer"}, {}};
  if (I) {
    t.title += " with fusion into the parabolic subgroup " + format_subset(*I);
    t.headers.push_back("fusion");
    t.headers.push_back("subgroup_centralizer");
  }
  json rows = json::array();
  for (std::size_t c = 0; c < ctx.classes().size(); ++c) {
    const auto& cls = ctx.classes()[c];
    const auto code = encode(cls.representative);
    std::string rep;
    for (std::size_t k = 0; k < code.size(); ++k) rep += (k ? "." : "") + std::to_string(code[k]);
    std::vector<std::string> row{cls.invariant.label, rep, std::to_string(cls.class_size),
                                 std::to_string(cls.centralizer_size)};
    json jr{{"label", cls.invariant.label},
            {"representative", rep},
            {"class_size", cls.class_size},
            {"centralizer_size", cls.centralizer_size}};
    if (I) {
      const auto fus = ctx.fusion(*I, c);
      const auto eff = ctx.effective_centralizer(*I, c);
      std::string eff_text = "-";
      if (eff) {
        std::ostringstream os;
        os << *eff;
        eff_text = eff->denominator() == 1 ? std::to_string(eff->numerator()) : os.str();
      }
      row.push_back(std::to_string(fus));
      row.push_back(eff_text);
      jr["fusion"] = fus;
      jr["subgroup_centralizer"] = eff_text;
    }
    t.rows.push_back(row);
    rows.push_back(jr);
  }
  if (format == Format::Json) {
    json j{{"group", g.name()}, {"order", g.order()}, {"classes", rows}};
    if (I) j["I"] = *I;
    out << j.dump(2) << "\n";
  } else {
    out << render(t, format);
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions : CommonOptions {
  std::string group;
  std::optional<std::string> I, J;
  std::optional<std::string> convention;
  bool rank3_all = false;
  bool inject_fault = false;
};

struct VerifyRow {
  std::string group, I, J, convention;
  std::string formula_orbits, oracle_orbits, brute_burnside, formula_univalent, oracle_univalent;
  bool match = false;
  std::string note;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Limits limits = limits_from(o);

  std::vector<GroupDescriptor> groups;
  if (o.rank3_all) groups = default_rank3_groups();
  else if (!o.group.empty()) groups.push_back(parse_group_spec(o.group));
  else throw CLI::ValidationError("verify", "either --group or --rank3-all is required");
  if (o.I.has_value() != o.J.has_value()) throw CLI::ValidationError("verify", "--I and --J go together");

  std::vector<Convention> conventions{Convention::Full, Convention::Lang};
  if (o.convention) conventions = {parse_convention(*o.convention)};

  std::vector<VerifyRow> rows;
  for (const auto& g : groups) {
    if (g.order() > limits.group_order_cap) throw CapExceeded(g.order(), limits.group_order_cap, "group " + g.name());
    std::vector<OrbitType> types;
    if (o.I) {
      types.push_back(make_orbit_type(g, parse_index_list(*o.I), parse_index_list(*o.J)));
    } else {
      // Every subset of size rank-1, plus ∅.
      std::vector<IndexSet> subsets;
      for (int missing = 1; missing <= g.rank(); ++missing) {
        IndexSet s;
        for (int k = 1; k <= g.rank(); ++k)
          if (k != missing) s.push_back(k);
        if (!s.empty()) subsets.push_back(s);
      }
      subsets.push_back({});
      for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a; b < subsets.size(); ++b) types.push_back(make_orbit_type(g, subsets[a], subsets[b]));
    }
    IndexedGroup w(g, limits);
    CountingContext ctx(g, limits);
    if (o.inject_fault) ctx.override_centralizer(ctx.identity_class(), g.order() + 1);
    for (const auto& ot : types) {
      for (auto conv : conventions) {
        VerifyRow row{g.name(), csv_subset(ot.I), csv_subset(ot.J), to_string(conv), "", "", "", "", "", false, ""};
        const StrutSpace space(w, ot, conv);
        const auto oc = oracle_counts(space);
        const auto burnside = brute_burnside(space);
        row.oracle_orbits = std::to_string(oc.strut_orbits);
        row.oracle_univalent = std::to_string(oc.univalent);
        row.brute_burnside = std::to_string(burnside);
        try {
          const auto r = ctx.count(ot, conv);
          row.formula_orbits = std::to_string(r.strut_orbits);
          row.formula_univalent = std::to_string(r.univalent);
          row.match = r.strut_orbits == oc.strut_orbits && burnside == oc.strut_orbits && r.univalent == oc.univalent;
        } catch (const IntegralityError& e) {
          row.formula_orbits = row.formula_univalent = "error";
          row.note = e.what();
        }
        rows.push_back(row);
      }
    }
  }

  bool all = true;
  for (const auto& r : rows) all = all && r.match;

  if (format == Format::Json) {
    json j{{"all_match", all}, {"rows", json::array()}};
    for (const auto& r : rows)
      j["rows"].push_back({{"group", r.group},
                           {"I", r.I},
                           {"J", r.J},
                           {"convention", r.convention},
                           {"formula_orbits", r.formula_orbits},
                           {"oracle_orbits", r.oracle_orbits},
                           {"brute_burnside", r.brute_burnside},
                           {"formula_univalent", r.formula_univalent},
                           {"oracle_univalent", r.oracle_univalent},
                           {"match", r.match},
                           {"note", r.note}});
    out << j.dump(2) << "\n";
  } else {
    TextTable t{"Formula versus brute-force oracle",
                {"group", "I", "J", "convention", "formula", "oracle", "burnside", "formula_U", "oracle_U", "match"},
                {}};
    for (const auto& r : rows)
      t.rows.push_back({r.group, r.I, r.J, r.convention, r.formula_orbits, r.oracle_orbits, r.brute_burnside,
                        r.formula_univalent, r.oracle_univalent, r.match ? "yes" : "NO"});
    out << render(t, format);
    if (format == Format::Human) {
      std::size_t bad = 0;
      for (const auto& r : rows) bad += r.match ? 0 : 1;
      out << rows.size() << " orbit type(s) checked, " << bad << " mismatch(es)\n";
      for (const auto& r : rows)
        if (!r.match)
          out << "  MISMATCH " << r.group << " " << r.I << " " << r.J << " " << r.convention << ": formula "
              << r.formula_orbits << "/" << r.formula_univalent << ", oracle " << r.oracle_orbits << "/"
              << r.oracle_univalent << ", Burnside " << r.brute_burnside << (r.note.empty() ? "" : " (" + r.note + ")")
              << "\n";
    }
  }
  return all ? kOk : kMismatch;
}

// ---------------------------------------------------------------- lang-demo

int cmd_lang_demo(const CommonOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Limits limits = limits_from(o);
  const auto r = lang_counterexample_check(limits);

  struct Row {
    std::string group, I, J, convention;
    std::uint64_t lengths, orbits;
  };
  std::vector<Row> rows;
  bool all_equal = true;
  for (const char* spec : {"A3", "B3", "H3"}) {
    const GroupDescriptor g = parse_group_spec(spec);
    CountingContext ctx(g, limits);
    const std::vector<IndexSet> subsets{{1, 2}, {1, 3}, {2, 3}, {}};
    for (auto conv : {Convention::Lang, Convention::Full})
      for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a; b < subsets.size(); ++b) {
          const OrbitType ot = make_orbit_type(g, subsets[a], subsets[b]);
          Row row{g.name(), csv_subset(ot.I), csv_subset(ot.J), to_string(conv),
                  lang_length_classes(ot, conv, limits), ctx.strut_orbit_count(ot, conv)};
          all_equal = all_equal && row.lengths == row.orbits;
          rows.push_back(row);
        }
  }
  auto vec = [](const ExactVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s + ")";
  };

  if (format == Format::Json) {
    json j;
    j["a"] = vec(r.a);
    j["b"] = vec(r.b);
    j["c"] = vec(r.c);
    j["ab_squared"] = r.ab_squared.to_string();
    j["ac_squared"] = r.ac_squared.to_string();
    j["equal_lengths"] = r.equal_lengths;
    j["distinct_orbits"] = r.distinct_orbits;
    j["elements_checked"] = r.elements_checked;
    j["support_note"] = r.support_note;
    j["b4_length_classes"] = r.length_classes;
    j["b4_true_orbits"] = r.true_orbits;
    j["rank3_all_equal"] = all_equal;
    j["rank3"] = json::array();
    for (const auto& row : rows)
      j["rank3"].push_back({{"group", row.group},
                            {"I", row.I},
                            {"J", row.J},
                            {"convention", row.convention},
                            {"length_classes", row.lengths},
                            {"orbits", row.orbits}});
    out << j.dump(2) << "\n";
    return all_equal ? kOk : kMismatch;
  }

  TextTable facts{"Equal-length struts in B4 that are not equivalent", {"fact", "value"}, {}};
  facts.rows = {{"a", vec(r.a)},
                {"b", vec(r.b)},
                {"c", vec(r.c)},
                {"|a-b|^2", r.ab_squared.to_string()},
                {"|a-c|^2", r.ac_squared.to_string()},
                {"equal lengths", yes_no(r.equal_lengths)},
                {"distinct orbits", yes_no(r.distinct_orbits)},
                {"elements checked", std::to_string(r.elements_checked)},
                {"why", r.support_note},
                {"length classes (B4,{1,3,4},{1,3,4})", std::to_string(r.length_classes)},
                {"true orbits (B4,{1,3,4},{1,3,4})", std::to_string(r.true_orbits)}};
  TextTable rank3{"Length classes versus orbits in rank 3", {"group", "I", "J", "convention", "lengths", "orbits", "equal"},
                  {}};
  for (const auto& row : rows)
    rank3.rows.push_back({row.group, row.I, row.J, row.convention, std::to_string(row.lengths),
                          std::to_string(row.orbits), yes_no(row.lengths == row.orbits)});
  out << render(facts, format) << "\n" << render(rank3, format);
  if (format == Format::Human) out << "rank 3 all equal: " << yes_no(all_equal) << "\n";
  return all_equal ? kOk : kMismatch;
}

template <typename Options>
void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json", "md"}))
      ->capture_default_str();
  cmd->add_option("--cap", o.cap, "Group-order cap (overrides PPCOUNT_CAP)")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts polypolyhedra of finite Coxeter groups and checks the counts by brute force", "ppcount"};
  app.require_subcommand(1);

  EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "Count strut orbits, univalent struts and P for one orbit type");
  enumerate->add_option("--group", eo.group, "Group spec, e.g. H3 or A1xI2(6)")->required();
  enumerate->add_option("--I", eo.I, "Comma-separated generator indices or 'empty'")->capture_default_str();
  enumerate->add_option("--J", eo.J, "Comma-separated generator indices or 'empty'")->capture_default_str();
  enumerate->add_option("--convention", eo.convention, "full or lang")
      ->check(CLI::IsMember({"full", "lang"}))
      ->capture_default_str();
  add_common(enumerate, eo);

  TableOptions to;
  auto* table = app.add_subcommand("table", "Rank-3 tables: all, univalent and non-univalent strut orbits");
  table->add_option("--groups", to.groups, "Rank-3 group specs (default: A1xI2(6) A3 B3 H3)")->delimiter(',');
  table->add_option("--convention", to.convention, "full or lang")
      ->check(CLI::IsMember({"full", "lang"}))
      ->capture_default_str();
  add_common(table, to);

  ClassesOptions co;
  auto* classes = app.add_subcommand("classes", "Conjugacy classes with sizes and centralisers");
  classes->add_option("--group", co.group, "Group spec")->required();
  classes->add_option("--I", co.I, "Also show fusion into the parabolic subgroup W_I");
  add_common(classes, co);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Compare formula counts against the brute-force oracle");
  verify->add_option("--group", vo.group, "Group spec");
  verify->add_option("--I", vo.I, "Restrict to one orbit type (with --J)");
  verify->add_option("--J", vo.J, "Restrict to one orbit type (with --I)");
  verify->add_option("--convention", vo.convention, "full or lang (default: both)")
      ->check(CLI::IsMember({"full", "lang"}));
  verify->add_flag("--rank3-all", vo.rank3_all, "All orbit types of A1xI2(6), A3, B3, H3");
  verify->add_flag("--inject-fault", vo.inject_fault, "Corrupt one centraliser (harness self-test)")->group("");
  add_common(verify, vo);

  CommonOptions lo;
  auto* lang = app.add_subcommand("lang-demo", "Length classes versus orbits; the B4 counterexample");
  add_common(lang, lo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(eo, out);
    if (*table) return cmd_table(to, out);
    if (*classes) return cmd_classes(co, out);
    if (*verify) return cmd_verify(vo, out);
    if (*lang) return cmd_lang_demo(lo, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFactor& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IntegralityError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ppcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ppcount::cli
