#include "pellq/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "pellq/checks.hpp"
#include "pellq/eqparse.hpp"
#include "pellq/general_pell.hpp"
#include "pellq/pell_core.hpp"
#include "pellq/power_filter.hpp"

namespace pellq::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { table, csv, json };

struct Field {
  std::string key;
  std::string value;
  bool boolean = false; // render as a JSON bool
};

struct Record {
  std::string kind;
  std::vector<Field> fields;
};

struct Meta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> bounds;
};

// ---- rendering ----------------------------------------------------------

bool digits_only(const std::string& s) {
  std::size_t i = s.size() && s[0] == '-' ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

// Long integer cells lose their middle digits in table output; CSV and JSON
// never elide.
std::string elide(const std::string& cell) {
  constexpr std::size_t kMax = 44;
  constexpr std::size_t kKeep = 16;
  if (cell.size() <= kMax || !digits_only(cell))
    return cell;
  const std::size_t dropped = cell.size() - 2 * kKeep;
  return cell.substr(0, kKeep) + "...(" + std::to_string(dropped) + " digits)..." +
         cell.substr(cell.size() - kKeep);
}

void render_table(std::ostream& out, const Meta& meta, const std::vector<Record>& records) {
  out << "# command=" << meta.command;
  for (const auto& [k, v] : meta.bounds)
    out << " " << k << "=" << v;
  out << " version=" << kVersion << "\n";
  if (records.empty()) {
    out << "(no records)\n";
    return;
  }
  std::vector<std::string> headers;
  for (const auto& f : records.front().fields)
    headers.push_back(f.key);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    std::vector<std::string> row;
    for (const auto& f : r.fields)
      row.push_back(elide(f.value));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < headers.size(); ++c) {
    std::size_t w = headers[c].size();
    for (const auto& row : rows)
      w = std::max(w, row[c].size());
    widths.push_back(w);
  }
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size())
        out << std::string(widths[c] - cells[c].size() + 2, ' ');
    }
    out << "\n";
  };
  emit_row(headers);
  for (const auto& row : rows)
    emit_row(row);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos)
    return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"')
      quoted += "\"\"";
    else
      quoted += c;
  }
  quoted += "\"";
  return quoted;
}

void render_csv(std::ostream& out, std::ostream& err, const Meta& meta,
                const std::vector<Record>& records) {
  // RFC 4180 has no comment syntax, so the bounds annotation goes to stderr
  err << "# command=" << meta.command;
  for (const auto& [k, v] : meta.bounds)
    err << " " << k << "=" << v;
  err << " version=" << kVersion << "\n";
  if (records.empty())
    return;
  std::string header;
  for (const auto& f : records.front().fields) {
    if (!header.empty())
      header += ",";
    header += csv_quote(f.key);
  }
  out << header << "\n";
  for (const auto& r : records) {
    std::string line;
    for (const auto& f : r.fields) {
      if (!line.empty())
        line += ",";
      line += csv_quote(f.value);
    }
    out << line << "\n";
  }
}

void render_json(std::ostream& out, const Meta& meta, const std::vector<Record>& records) {
  ordered_json doc;
  doc["meta"]["command"] = meta.command;
  doc["meta"]["bounds"] = ordered_json::object();
  for (const auto& [k, v] : meta.bounds)
    doc["meta"]["bounds"][k] = v;
  doc["meta"]["version"] = kVersion;
  doc["records"] = ordered_json::array();
  for (const auto& r : records) {
    ordered_json rec;
    rec["kind"] = r.kind;
    for (const auto& f : r.fields) {
      if (f.boolean)
        rec[f.key] = f.value == "true";
      else
        rec[f.key] = f.value;
    }
    doc["records"].push_back(std::move(rec));
  }
  out << doc.dump(2) << "\n";
}

void render(Format format, std::ostream& out, std::ostream& err, const Meta& meta,
            const std::vector<Record>& records) {
  switch (format) {
  case Format::table:
    render_table(out, meta, records);
    break;
  case Format::csv:
    render_csv(out, err, meta, records);
    break;
  case Format::json:
    render_json(out, meta, records);
    break;
  }
}

// ---- records ------------------------------------------------------------

Record pell_pair_record(const PellPair& p) {
  return Record{"pell_pair",
                {{"n", std::to_string(p.n)},
                 {"eps", std::to_string(p.eps)},
                 {"x", p.x.to_string()},
                 {"t", p.t.to_string()}}};
}

Record quartic_record(const QuarticSolution& s) {
  return Record{"quartic_solution",
                {{"n", std::to_string(s.n)},
                 {"eps", std::to_string(s.eps)},
                 {"x", s.x.to_string()},
                 {"y", s.y.to_string()}}};
}

Record general_record(const UV& s) {
  return Record{"general_solution", {{"x", s.first.to_string()}, {"y", s.second.to_string()}}};
}

Record check_record(const CheckResult& c) {
  return Record{"check_report",
                {{"check", c.name}, {"pass", c.pass ? "true" : "false", true},
                 {"detail", c.detail}}};
}

// ---- subcommands --------------------------------------------------------

struct CommonFlags {
  std::string format = "table";
  Format parsed_format() const {
    if (format == "csv")
      return Format::csv;
    if (format == "json")
      return Format::json;
    return Format::table;
  }
};

std::vector<int> branches(const std::string& eps) {
  if (eps == "+1" || eps == "1")
    return {+1};
  if (eps == "-1")
    return {-1};
  return {+1, -1};
}

int cmd_generate(std::uint64_t max_index, const std::string& eps, bool verify, Format format,
                 std::ostream& out, std::ostream& err) {
  std::vector<Record> records;
  bool verified = true;
  std::string verify_detail;
  for (std::uint64_t n = 0; n <= max_index; ++n) {
    for (int e : branches(eps)) {
      PellPair p = solution_at(n, e);
      records.push_back(pell_pair_record(p));
    }
  }
  if (verify) {
    for (int e : branches(eps)) {
      std::vector<PellPair> rec = generate(e, max_index);
      for (std::uint64_t n = 0; n <= max_index && verified; ++n) {
        PellPair p = solution_at(n, e);
        if (p.x != rec[n].x || p.t != rec[n].t) {
          verified = false;
          verify_detail = "matrix power disagrees with recurrence at n=" + std::to_string(n) +
                          ", eps=" + std::to_string(e);
        }
      }
    }
  }
  Meta meta{"generate",
            {{"max_index", std::to_string(max_index)},
             {"eps", eps},
             {"verify", verify ? "true" : "false"}}};
  render(format, out, err, meta, records);
  if (!verified) {
    err << "verify failed: " << verify_detail << "\n";
    return 1;
  }
  return 0;
}

bool is_title_equation(const EquationSpec& spec) {
  return spec == EquationSpec{BigInt(1), 1, BigInt(2), 2, BigInt(-1)};
}

int cmd_solve(const std::string& equation, std::uint64_t max_index, std::uint64_t v_bound,
              std::uint64_t family_steps, bool allow_zero, bool prefilter, Format format,
              std::ostream& out, std::ostream& err) {
  EquationSpec spec = parse_equation(equation); // ParseError handled by the caller
  std::vector<Record> records;
  Meta meta{"solve", {}};
  meta.bounds.emplace_back("equation", unparse(spec));
  if (is_title_equation(spec)) {
    meta.bounds.emplace_back("solver", "quartic_search");
    meta.bounds.emplace_back("max_index", std::to_string(max_index));
    meta.bounds.emplace_back("prefilter", prefilter ? "on" : "off");
    SearchOptions opts;
    opts.prefilter = prefilter;
    for (const auto& s : search_quartic(max_index, opts))
      records.push_back(quartic_record(s));
  } else {
    meta.bounds.emplace_back("solver", "general");
    meta.bounds.emplace_back("v_bound", std::to_string(v_bound));
    meta.bounds.emplace_back("family_steps", std::to_string(family_steps));
    meta.bounds.emplace_back("allow_zero", allow_zero ? "true" : "false");
    SolveOptions opts;
    opts.v_bound = v_bound;
    opts.family_count = family_steps;
    opts.allow_zero = allow_zero;
    for (const auto& s : solve_general(spec, opts))
      records.push_back(general_record(s));
  }
  render(format, out, err, meta, records);
  return 0;
}

int cmd_check(std::uint64_t max_index, Format format, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results = run_checks(max_index);
  std::vector<Record> records;
  for (const auto& c : results)
    records.push_back(check_record(c));
  Meta meta{"check", {{"max_index", std::to_string(max_index)}}};
  render(format, out, err, meta, records);
  return all_passed(results) ? 0 : 1;
}

int cmd_bench(std::uint64_t max_index, std::uint64_t repetitions, Format format,
              std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  repetitions = std::max<std::uint64_t>(repetitions, 1);

  std::vector<std::uint64_t> rungs;
  for (std::uint64_t n = 1; n <= max_index; n *= 2) {
    rungs.push_back(n);
    if (n > max_index / 2)
      break;
  }
  if (rungs.empty() || rungs.back() != max_index)
    rungs.push_back(max_index);

  auto run_recurrence = [](std::uint64_t n) {
    PellPair p = seed(+1);
    for (std::uint64_t i = 0; i < n; ++i)
      p = step(p);
    return p;
  };

  std::vector<Record> records;
  for (std::uint64_t n : rungs) {
    struct Method {
      const char* name;
      std::function<PellPair(std::uint64_t)> fn;
    };
    const Method methods[3] = {
        {"recurrence", run_recurrence},
        {"matrix_power", [](std::uint64_t k) { return solution_at(k, +1); }},
        {"closed_form", [](std::uint64_t k) { return closed_form(k, +1); }},
    };

    PellPair outputs[3];
    for (int m = 0; m < 3; ++m) {
      outputs[m] = methods[m].fn(n); // warm-up run, result kept for the equality gate
      std::vector<std::int64_t> samples;
      for (std::uint64_t rep = 0; rep < repetitions; ++rep) {
        auto start = clock::now();
        PellPair p = methods[m].fn(n);
        auto stop = clock::now();
        if (p.x != outputs[m].x || p.t != outputs[m].t) {
          err << "bench: nondeterministic result from " << methods[m].name << "\n";
          return 1;
        }
        samples.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
      }
      std::sort(samples.begin(), samples.end());
      std::int64_t min_ns = samples.front();
      std::int64_t median_ns = samples.size() % 2 == 1
                                   ? samples[samples.size() / 2]
                                   : (samples[samples.size() / 2 - 1] + samples[samples.size() / 2]) / 2;
      records.push_back(Record{"bench_sample",
                               {{"n", std::to_string(n)},
                                {"method", methods[m].name},
                                {"repetitions", std::to_string(repetitions)},
                                {"min_ns", std::to_string(min_ns)},
                                {"median_ns", std::to_string(median_ns)}}});
    }

    if (outputs[0].x != outputs[1].x || outputs[0].t != outputs[1].t ||
        outputs[0].x != outputs[2].x || outputs[0].t != outputs[2].t) {
      err << "bench: methods disagree at n=" << n << "\n";
      return 1;
    }
  }

  Meta meta{"bench",
            {{"max_index", std::to_string(max_index)},
             {"repetitions", std::to_string(repetitions)}}};
  render(format, out, err, meta, records);
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic toolkit for x^2 = 2*y^4 - 1 and its generalizations"};
  app.require_subcommand(1);

  CommonFlags common;
  std::uint64_t max_index = 64;
  std::string eps = "both";
  bool verify = false;
  std::string equation;
  std::uint64_t v_bound = 1'000'000;
  std::uint64_t family_steps = 64;
  bool allow_zero = false;
  std::string prefilter = "off";
  std::uint64_t repetitions = 3;

  auto add_format = [&common](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
  };

  CLI::App* gen = app.add_subcommand("generate", "Emit Pell pairs for indices 0..N");
  gen->add_option("--max-index", max_index, "Largest index n")->capture_default_str();
  gen->add_option("--eps", eps, "Branch selector")
      ->check(CLI::IsMember({"+1", "-1", "both"}))
      ->capture_default_str();
  gen->add_flag("--verify", verify, "Cross-check matrix power against the recurrence");
  add_format(gen);

  CLI::App* solve = app.add_subcommand("solve", "Solve C*x^(2a) = D*y^(2b) + E");
  solve->add_option("equation", equation, "Equation, e.g. \"x^2 = 2y^4 - 1\"")->required();
  solve->add_option("--max-index", max_index, "Pell index bound (quartic search)")
      ->capture_default_str();
  solve->add_option("--v-bound", v_bound, "Base-solution bound on V (general solver)")
      ->capture_default_str();
  solve->add_option("--family-steps", family_steps, "Unit-orbit steps per base (general solver)")
      ->capture_default_str();
  solve->add_flag("--allow-zero", allow_zero, "Admit zero components in solutions");
  solve->add_option("--prefilter", prefilter, "Modular square pre-rejection (quartic search)")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  add_format(solve);

  CLI::App* check = app.add_subcommand("check", "Run eigen and agreement checks");
  check->add_option("--max-index", max_index, "Largest index n")->capture_default_str();
  add_format(check);

  CLI::App* bench = app.add_subcommand("bench", "Compare generation methods over an n ladder");
  bench->add_option("--max-index", max_index, "Largest rung n")->capture_default_str();
  bench->add_option("--repetitions", repetitions, "Timed repetitions per rung")
      ->capture_default_str();
  add_format(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 convention
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Format format = common.parsed_format();
    if (gen->parsed())
      return cmd_generate(max_index, eps, verify, format, out, err);
    if (solve->parsed())
      return cmd_solve(equation, max_index, v_bound, family_steps, allow_zero,
                       prefilter == "on", format, out, err);
    if (check->parsed())
      return cmd_check(max_index, format, out, err);
    if (bench->parsed())
      return cmd_bench(max_index, repetitions, format, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace pellq::cli
