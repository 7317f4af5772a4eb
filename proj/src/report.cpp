#include "supercong/report.hpp"

#include <json.hpp>

#include <sstream>

#include "supercong/errors.hpp"

#ifndef SUPERCONG_VERSION
#define SUPERCONG_VERSION "0.0.0"
#endif

namespace supercong {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "SKIPPED";
}

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "SKIPPED") return Status::Skipped;
  throw ConfigError("unknown status '" + s + "'");
}

CheckReport compare(std::string family, const Residue& lhs, const Residue& rhs) {
  if (!(lhs.ring() == rhs.ring())) {
    throw PreconditionError("compare: sides live in different rings (" + lhs.ring().to_string() +
                            " vs " + rhs.ring().to_string() + ")");
  }
  CheckReport row;
  row.family = std::move(family);
  row.modulus = lhs.ring().to_string();
  row.lhs = lhs.to_string();
  row.rhs = rhs.to_string();
  row.status = lhs == rhs ? Status::Pass : Status::Fail;
  return row;
}

CheckReport compare(std::string family, const BigRational& lhs, const BigRational& rhs) {
  CheckReport row;
  row.family = std::move(family);
  row.modulus = "exact";
  row.lhs = to_decimal(lhs);
  row.rhs = to_decimal(rhs);
  row.status = lhs == rhs ? Status::Pass : Status::Fail;
  return row;
}

CheckReport skipped(std::string family, std::string reason) {
  CheckReport row;
  row.family = std::move(family);
  row.status = Status::Skipped;
  row.note = std::move(reason);
  return row;
}

void Sweep::add(CheckReport point) {
  ++points_;
  if (point.status == Status::Fail && !first_fail_) first_fail_ = point;
  last_ = std::move(point);
}

CheckReport Sweep::result(const std::string& pass_note) const {
  if (first_fail_) {
    CheckReport row = *first_fail_;
    row.note = "first failure at " + row.note;
    return row;
  }
  if (!last_) return skipped(family_, "empty range");
  CheckReport row = *last_;
  row.note = pass_note;
  return row;
}

Summary summarize(const std::vector<CheckReport>& checks) {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        if (c.informational) {
          ++s.informational_fail;
        } else {
          ++s.fail;
        }
        break;
      case Status::Skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

int RunReport::exit_code() const { return summary().fail == 0 ? 0 : 1; }

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "human") return Format::Human;
  throw ConfigError("unknown format '" + s + "' (expected json, csv or human)");
}

namespace {

using ojson = nlohmann::ordered_json;

ojson check_json(const CheckReport& c) {
  ojson o;
  o["family"] = c.family;
  o["p"] = c.p ? ojson(*c.p) : ojson(nullptr);
  o["n"] = c.n ? ojson(*c.n) : ojson(nullptr);
  o["lambda"] = c.lambda ? ojson(*c.lambda) : ojson(nullptr);
  o["modulus"] = c.modulus;
  o["lhs"] = c.lhs;
  o["rhs"] = c.rhs;
  o["status"] = to_string(c.status);
  o["note"] = c.note;
  o["informational"] = c.informational;
  return o;
}

std::string emit_json(const RunReport& r) {
  ojson o;
  o["tool"] = "supercong";
  o["version"] = SUPERCONG_VERSION;
  o["subcommand"] = r.subcommand;
  if (r.timestamp) o["timestamp"] = *r.timestamp;
  ojson cfg = ojson::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  o["config"] = cfg;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  o["checks"] = checks;
  const Summary s = r.summary();
  o["summary"] = {{"pass", s.pass},
                  {"fail", s.fail},
                  {"skipped", s.skipped},
                  {"informational_fail", s.informational_fail}};
  if (r.wall_ms) o["wall_time_ms"] = *r.wall_ms;
  return o.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

const char* const kCsvHeader = "family,p,n,lambda,modulus,lhs,rhs,status,note";

std::string emit_csv(const RunReport& r) {
  std::ostringstream out;
  out << kCsvHeader << "\r\n";
  for (const auto& c : r.checks) {
    out << csv_field(c.family) << ',' << (c.p ? std::to_string(*c.p) : "") << ','
        << (c.n ? std::to_string(*c.n) : "") << ',' << csv_field(c.lambda.value_or("")) << ','
        << csv_field(c.modulus) << ',' << csv_field(c.lhs) << ',' << csv_field(c.rhs) << ','
        << to_string(c.status) << ',' << csv_field(c.note) << "\r\n";
  }
  return out.str();
}

std::string emit_human(const RunReport& r) {
  std::ostringstream out;
  out << "supercong " << SUPERCONG_VERSION << " " << r.subcommand << "\n";
  if (r.timestamp) out << "started " << *r.timestamp << "\n";
  for (const auto& c : r.checks) {
    out << (c.informational ? "(info) " : "") << to_string(c.status) << "  " << c.family;
    if (c.p) out << " p=" << *c.p;
    if (c.n) out << " n=" << *c.n;
    if (c.lambda) out << " lambda=" << *c.lambda;
    if (!c.modulus.empty()) out << " mod " << c.modulus;
    if (c.status != Status::Skipped) out << "  lhs=" << c.lhs << " rhs=" << c.rhs;
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << "\n";
  }
  const Summary s = r.summary();
  out << "pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped;
  if (s.informational_fail) out << ", informational fail " << s.informational_fail;
  out << "\n";
  if (r.wall_ms) out << "wall time " << *r.wall_ms << " ms\n";
  return out.str();
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw ConfigError("CSV: unterminated quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string emit_report(const RunReport& report, Format format) {
  switch (format) {
    case Format::Json:
      return emit_json(report);
    case Format::Csv:
      return emit_csv(report);
    case Format::Human:
      return emit_human(report);
  }
  return emit_json(report);
}

std::vector<CheckReport> parse_csv(const std::string& text) {
  auto rows = split_csv(text);
  if (rows.empty()) throw ConfigError("CSV: missing header");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + rows[0][i];
  if (header != kCsvHeader) throw ConfigError("CSV: unexpected header '" + header + "'");
  std::vector<CheckReport> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r];
    if (f.size() != 9) {
      throw ConfigError("CSV: row " + std::to_string(r) + " has " + std::to_string(f.size()) +
                        " fields");
    }
    CheckReport c;
    c.family = f[0];
    if (!f[1].empty()) c.p = std::stoull(f[1]);
    if (!f[2].empty()) c.n = std::stoll(f[2]);
    if (!f[3].empty()) c.lambda = f[3];
    c.modulus = f[4];
    c.lhs = f[5];
    c.rhs = f[6];
    c.status = status_from_string(f[7]);
    c.note = f[8];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace supercong
