#include "qwalk/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& field, std::size_t line_no) {
  std::istringstream ss(field);
  T value{};
  ss >> value;
  if (!ss || !(ss >> std::ws).eof())
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + field + "'");
  return value;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

void write_state_csv(std::ostream& out, const PositionState& s) {
  out << kStateCsvHeader << '\n';
  for (const Site& site : s.sites()) {
    out << site.point.m << ',' << site.point.n;
    for (const auto& a : site.amplitudes) out << ',' << format_real(a.real()) << ',' << format_real(a.imag());
    out << '\n';
  }
}

PositionState read_state_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kStateCsvHeader)
    throw ParseError("state CSV: missing or wrong header");
  std::vector<Site> sites;
  std::set<LatticePoint> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (fields.size() != 10)
      throw ParseError("line " + std::to_string(line_no) + ": expected 10 fields, got " +
                       std::to_string(fields.size()));
    Site site;
    site.point = {parse_number<std::int64_t>(fields[0], line_no), parse_number<std::int64_t>(fields[1], line_no)};
    for (std::size_t c = 0; c < kCoinDim; ++c)
      site.amplitudes[c] = {parse_number<double>(fields[2 + 2 * c], line_no),
                            parse_number<double>(fields[3 + 2 * c], line_no)};
    if (!seen.insert(site.point).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate lattice point");
    sites.push_back(site);
  }
  return PositionState(std::move(sites));
}

void save_state(const std::filesystem::path& path, const PositionState& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_state_csv(out, s);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

PositionState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open state file " + path.string());
  return read_state_csv(in);
}

void write_distribution_csv(std::ostream& out, const PositionState& s) {
  out << "m,n,prob\n";
  for (const auto& [p, prob] : position_distribution(s))
    out << p.m << ',' << p.n << ',' << format_real(prob) << '\n';
}

}  // namespace qwalk
