#include "colehopf/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "colehopf/errors.hpp"

namespace colehopf {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io-error", "cannot open for writing: " + tmp);
    out << content;
    if (!out) throw Error("io-error", "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("io-error", "rename failed: " + path + " (" + ec.message() + ")");
}

void write_field_csv(const ComplexField& f, const std::string& role, const std::string& path) {
  std::string out;
  out.reserve(f.values.size() * 48 + 64);
  out += "# field=" + role + " time=" + format_double(f.time) + "\n";
  out += "x,re,im\n";
  for (int i = 0; i < f.grid.n; ++i) {
    out += format_double(f.grid.node(i));
    out += ',';
    out += format_double(f.values[static_cast<std::size_t>(i)].real());
    out += ',';
    out += format_double(f.values[static_cast<std::size_t>(i)].imag());
    out += '\n';
  }
  write_text_atomic(path, out);
}

namespace {

double parse_number(const std::string& s, const std::string& path) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("config-parse", "bad number '" + s + "' in " + path);
  }
  return v;
}

}  // namespace

ComplexField read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open: " + path);

  double time = 0.0;
  std::vector<double> xs;
  std::vector<std::complex<double>> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("time=");
      if (pos != std::string::npos) time = parse_number(line.substr(pos + 5), path);
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;  // header row
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < 3) throw Error("config-parse", "expected x,re,im row in " + path);
    xs.push_back(parse_number(cells[0], path));
    vals.emplace_back(parse_number(cells[1], path), parse_number(cells[2], path));
  }
  if (xs.size() < 2) throw Error("config-parse", "field CSV needs at least 2 rows: " + path);

  ComplexField f;
  f.grid = make_uniform_grid(xs.front(), xs.back(), static_cast<int>(xs.size()));
  f.values = std::move(vals);
  f.time = time;
  require_finite(f, "read_field_csv");
  return f;
}

}  // namespace colehopf
