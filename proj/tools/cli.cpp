#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "render.hpp"
#include "shogi/control.hpp"
#include "shogi/error.hpp"
#include "shogi/oracle.hpp"
#include "shogi/pattern_io.hpp"
#include "shogi/search.hpp"
#include "shogi/symmetry.hpp"

namespace fs = std::filesystem;

namespace shogi::cli {

namespace {

std::string verdict_word(const NccStatus& s) {
  switch (s.verdict) {
    case Verdict::Complete:
      return "complete";
    case Verdict::NearlyComplete:
      return "nearly";
    case Verdict::Fails:
      return "fail";
  }
  return "?";
}

std::string tsv_header() {
  std::string h = "group";
  for (auto k : table_kind_order()) h += '\t' + KindRegistry::standard().name(k);
  return h + '\n';
}

std::string tsv_row(const std::string& label, const std::map<PieceKind, NccStatus>& details) {
  std::string row = label;
  for (auto k : table_kind_order()) row += '\t' + verdict_word(details.at(k));
  return row + '\n';
}

// Fixtures named <group>.pat, one per frieze group, checked against their
// classification.
std::vector<PeriodicPattern> load_fixtures(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  std::vector<PeriodicPattern> out;
  for (FriezeGroup g : table_group_order()) {
    const fs::path file = fs::path(dir) / (std::string(to_string(g)) + ".pat");
    if (!fs::exists(file)) throw Error("missing fixture: " + file.string());
    PeriodicPattern p = load_pattern_file(file.string()).pattern;
    if (classify_frieze(p) != g)
      throw Error("fixture " + file.string() + " classifies as " + std::string(to_string(classify_frieze(p))));
    out.push_back(std::move(p));
  }
  return out;
}

KindVector parse_target(const std::string& text) {
  const auto& cols = table_kind_order();
  if (text.size() != cols.size()) throw CLI::ValidationError("--target", "expected 8 characters");
  KindVector v;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const char c = text[i];
    if (c == '1' || c == 'o')
      v[cols[i]] = true;
    else if (c == '0' || c == 'x')
      v[cols[i]] = false;
    else
      throw CLI::ValidationError("--target", "characters must be 0/1 (or x/o)");
  }
  return v;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

struct Options {
  std::string file;
  std::string dir;
  std::string format = "ascii";
  std::string out;
  std::string layers = "pieces";
  int periods = 3;
  bool oracle = false;
  std::string group;
  std::string target;
  int max_pieces = 4;
  int max_period = 4;
  std::string box = "4x3";
  bool decor = false;
  bool both = false;
  std::size_t limit = 10;
  std::vector<std::string> substitutions;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const PeriodicPattern p = load_pattern_file(o.file).pattern;
  const SymmetryReport r = detect_symmetries(p);
  out << "group=" << to_string(classify_flags(r.flags)) << '\n';
  for (const auto& w : r.witnesses) out << w.role << ' ' << w.isometry.describe() << '\n';
  return 0;
}

int cmd_ncc(const Options& o, std::ostream& out, std::ostream& err) {
  const PatternDocument doc = load_pattern_file(o.file);
  const NccStatus s = ncc_status(doc.pattern, doc.kinds);
  out << "verdict=" << to_string(s) << '\n';
  if (o.oracle) {
    const oracle::FiniteBoard b = oracle::replicate(doc.pattern, 9);
    const NccStatus brute = oracle::brute_ncc(b, oracle::central_window(b), doc.kinds);
    out << "oracle=" << to_string(brute) << '\n';
    if (!(brute == s)) {
      err << "oracle disagrees with the periodic engine\n";
      return 1;
    }
  }
  return 0;
}

int cmd_control(const Options& o, std::ostream& out) {
  const PatternDocument doc = load_pattern_file(o.file);
  const PeriodicCellSet c = control_of_pattern(doc.pattern, doc.kinds);
  out << "period=" << c.period.dx << ' ' << c.period.dy << '\n';
  for (Cell x : c.classes) out << "cell " << x.x << ' ' << x.y << '\n';
  for (const auto& l : c.free_lines)
    out << "line " << l.anchor.x << ' ' << l.anchor.y << ' ' << l.direction.dx << ' ' << l.direction.dy << '\n';
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto fixtures = load_fixtures(o.dir);
  std::string text = tsv_header();
  for (std::size_t i = 0; i < fixtures.size(); ++i)
    text += tsv_row(std::string(to_string(table_group_order()[i])),
                    ncc_vector(form_of(fixtures[i]), table_kind_order()));
  if (o.out.empty())
    out << text;
  else
    write_text(o.out, text);
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  const PatternDocument doc = load_pattern_file(o.file);
  RenderSpec spec;
  if (o.format == "ascii")
    spec.format = RenderSpec::Format::Ascii;
  else if (o.format == "svg")
    spec.format = RenderSpec::Format::Svg;
  else
    throw CLI::ValidationError("--format", "expected ascii or svg");
  spec.pieces = false;
  std::stringstream layers(o.layers);
  std::string layer;
  while (std::getline(layers, layer, ',')) {
    if (layer == "pieces")
      spec.pieces = true;
    else if (layer == "neighborhood")
      spec.neighborhood = true;
    else if (layer == "partition")
      spec.partition = true;
    else if (layer == "control")
      spec.control = true;
    else
      throw CLI::ValidationError("--layers", "unknown layer '" + layer + "'");
  }
  if (o.periods < 1) throw CLI::ValidationError("--periods", "must be at least 1");
  spec.periods = o.periods;
  const std::string text = render(doc.pattern, doc.kinds, spec);
  if (o.out.empty())
    out << text;
  else
    write_text(o.out, text);
  return 0;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto g = parse_frieze_group(o.group);
  if (!g) throw CLI::ValidationError("--group", "unknown frieze group '" + o.group + "'");
  const KindVector target = parse_target(o.target);
  SearchBounds b;
  b.max_motif_pieces = o.max_pieces;
  b.max_period = o.max_period;
  const auto x = o.box.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument("box");
    b.box_width = std::stoi(o.box.substr(0, x));
    b.box_height = std::stoi(o.box.substr(x + 1));
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--box", "expected WxH");
  }
  b.allow_down = o.both;
  b.allow_decorations = o.decor;
  b.limit = o.limit;
  const auto reports = find_crystal(*g, target, b);

  std::string tsv = "file\t" + tsv_header();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::ostringstream name;
    name << o.group << '-' << std::setw(3) << std::setfill('0') << i + 1 << ".pat";
    names.push_back(name.str());
    const std::string row = tsv_row(o.group, ncc_vector(reports[i].form, table_kind_order()));
    tsv += names.back() + '\t' + row;
    if (o.out.empty()) out << row;
  }
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    for (std::size_t i = 0; i < reports.size(); ++i)
      save_pattern_file((fs::path(o.out) / names[i]).string(), instantiate(reports[i].form, kinds::King));
    write_text((fs::path(o.out) / "report.tsv").string(), tsv);
  }
  out << "found=" << reports.size() << '\n';
  return 0;
}

int cmd_fragility(const Options& o, std::ostream& out) {
  const auto fixtures = load_fixtures(o.dir);
  const KindRegistry& registry = KindRegistry::standard();
  std::size_t total = 0;
  for (const auto& sub : o.substitutions) {
    const auto eq = sub.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--substitute", "expected kind=moveset");
    const auto kind = registry.find_by_name(sub.substr(0, eq));
    if (!kind) throw CLI::ValidationError("--substitute", "unknown kind '" + sub.substr(0, eq) + "'");
    const auto moveset = named_moveset(sub.substr(eq + 1));
    if (!moveset) throw CLI::ValidationError("--substitute", "unknown moveset '" + sub.substr(eq + 1) + "'");
    const auto changed = fragility_check(fixtures, *kind, *moveset);
    for (const auto& c : changed)
      out << sub << '\t' << to_string(c.group) << '\t' << registry.name(c.kind) << '\t'
          << (c.before ? "satisfied" : "unsatisfied") << "->" << (c.after ? "satisfied" : "unsatisfied") << '\n';
    total += changed.size();
  }
  out << "changed=" << total << '\n';
  return 0;
}

}  // namespace

std::optional<Moveset> named_moveset(const std::string& name) {
  if (name == "reverse-chariot") return Moveset::make({}, {{0, 1}, {0, -1}});
  if (name == "silver-sideways") {
    std::vector<Displacement> steps = standard_moveset(kinds::Silver).steps();
    steps.push_back({1, 0});
    steps.push_back({-1, 0});
    return Moveset::make(steps, {});
  }
  if (name == "chess-knight")
    return Moveset::make({{1, 2}, {-1, 2}, {1, -2}, {-1, -2}, {2, 1}, {-2, 1}, {2, -1}, {-2, -1}}, {});
  if (auto k = KindRegistry::standard().find_by_name(name)) return standard_moveset(*k);
  return std::nullopt;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic shogi patterns: control conditions and frieze symmetry", "shogi-crystal"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Frieze group and symmetry witnesses of a pattern file");
  classify->add_option("file", o.file)->required();

  auto* ncc = app.add_subcommand("ncc", "Neighborhood control verdict");
  ncc->add_option("file", o.file)->required();
  ncc->add_flag("--oracle", o.oracle)->group("");

  auto* control = app.add_subcommand("control", "Control classes and unbounded rays");
  control->add_option("file", o.file)->required();

  auto* table = app.add_subcommand("table", "Verdict table over the seven crystal fixtures");
  table->add_option("dir", o.dir)->required();
  table->add_option("--out", o.out, "Write the TSV here instead of stdout");

  auto* rend = app.add_subcommand("render", "Draw a pattern as text or SVG");
  rend->add_option("file", o.file)->required();
  rend->add_option("--format", o.format, "ascii or svg");
  rend->add_option("--layers", o.layers, "Comma list of pieces, neighborhood, partition, control");
  rend->add_option("--periods", o.periods, "Number of periods drawn");
  rend->add_option("--out", o.out, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Search crystals for one table row");
  search->add_option("--group", o.group)->required();
  search->add_option("--target", o.target, "8 flags in column order knight..king, 1 = satisfied")->required();
  search->add_option("--max-pieces", o.max_pieces);
  search->add_option("--max-period", o.max_period);
  search->add_option("--box", o.box, "WxH");
  search->add_flag("--decor", o.decor);
  search->add_flag("--both-orientations", o.both);
  search->add_option("--limit", o.limit, "Stop after N results (0 = all)");
  search->add_option("--out", o.out, "Write result files and report.tsv here");

  auto* fragility = app.add_subcommand("fragility", "Table cells changed by moveset substitutions");
  fragility->add_option("--fixtures", o.dir)->required();
  fragility->add_option("--substitute", o.substitutions, "kind=moveset")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*classify) return cmd_classify(o, out);
    if (*ncc) return cmd_ncc(o, out, err);
    if (*control) return cmd_control(o, out);
    if (*table) return cmd_table(o, out);
    if (*rend) return cmd_render(o, out);
    if (*search) return cmd_search(o, out);
    if (*fragility) return cmd_fragility(o, out);
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace shogi::cli
