#include "fairenum/model_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>

#include "fairenum/errors.hpp"
#include "text_util.hpp"

namespace fairenum::io {
namespace {

struct Entry {
  std::size_t i;
  std::size_t j;
  double value;
};

struct RawModel {
  bool is_qubo = true;
  std::size_t n = 0;
  double offset = 0.0;
  std::vector<Entry> entries;
};

RawModel parse_raw(std::string_view text) {
  RawModel raw;
  bool have_header = false;
  std::optional<double> offset;

  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) return;
    if (tokens[0].front() == '#') {
      std::vector<std::string_view> rest(tokens.begin() + 1, tokens.end());
      if (tokens[0].size() > 1) rest.insert(rest.begin(), tokens[0].substr(1));
      if (rest.empty()) return;
      if (rest[0] == "qubo" || rest[0] == "ising") {
        if (have_header) throw ParseError(line_no, "duplicate model header");
        if (rest.size() != 2) throw ParseError(line_no, "header must be '# qubo|ising <n>'");
        auto n = detail::parse_number<std::size_t>(rest[1]);
        if (!n || *n == 0) throw ParseError(line_no, "model size must be a positive integer");
        raw.is_qubo = rest[0] == "qubo";
        raw.n = *n;
        have_header = true;
      } else if (rest[0] == "offset") {
        if (offset) throw ParseError(line_no, "duplicate offset line");
        if (rest.size() != 2) throw ParseError(line_no, "offset line must be '# offset <value>'");
        auto v = detail::parse_number<double>(rest[1]);
        if (!v || !std::isfinite(*v)) throw ParseError(line_no, "invalid offset value");
        offset = *v;
      }
      return;
    }
    if (!have_header) throw ParseError(line_no, "coefficient before model header");
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<i> <j> <value>'");
    auto i = detail::parse_number<std::size_t>(tokens[0]);
    auto j = detail::parse_number<std::size_t>(tokens[1]);
    auto v = detail::parse_number<double>(tokens[2]);
    if (!i || !j) throw ParseError(line_no, "indices must be nonnegative integers");
    if (*i >= raw.n || *j >= raw.n) throw ParseError(line_no, "index out of range");
    if (!v || !std::isfinite(*v)) throw ParseError(line_no, "invalid coefficient value");
    raw.entries.push_back({*i, *j, *v});
  });

  if (!have_header) throw ParseError(0, "missing '# qubo <n>' or '# ising <n>' header");
  raw.offset = offset.value_or(0.0);
  return raw;
}

std::string write_common(const char* kind, std::size_t n, double offset,
                         const std::vector<double>& diagonal,
                         const std::map<ising::IndexPair, double>& off_diagonal) {
  std::string out = std::string("# ") + kind + " " + std::to_string(n) + "\n";
  out += "# offset " + format_double(offset) + "\n";
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (diagonal[i] == 0.0) continue;
    out += std::to_string(i) + " " + std::to_string(i) + " " + format_double(diagonal[i]) + "\n";
  }
  for (const auto& [ij, value] : off_diagonal) {
    out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " +
           format_double(value) + "\n";
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string write_model(const ising::QuboModel& model) {
  return write_common("qubo", model.n_vars(), model.offset(), model.linear(),
                      model.quadratic());
}

std::string write_model(const ising::IsingModel& model) {
  return write_common("ising", model.n_spins(), model.offset(), model.fields(),
                      model.couplings());
}

AnyModel read_model(std::string_view text) {
  const RawModel raw = parse_raw(text);
  if (raw.is_qubo) {
    ising::QuboModel m(raw.n);
    m.add_offset(raw.offset);
    for (const auto& e : raw.entries) {
      if (e.i == e.j) {
        m.add_linear(e.i, e.value);
      } else {
        m.add_quadratic(e.i, e.j, e.value);
      }
    }
    return m;
  }
  ising::IsingModel m(raw.n);
  m.add_offset(raw.offset);
  for (const auto& e : raw.entries) {
    if (e.i == e.j) {
      m.add_field(e.i, e.value);
    } else {
      m.add_coupling(e.i, e.j, e.value);
    }
  }
  return m;
}

ising::QuboModel read_qubo(std::string_view text) {
  auto any = read_model(text);
  if (auto* q = std::get_if<ising::QuboModel>(&any)) return std::move(*q);
  throw ParseError(0, "expected a qubo model, found an ising model");
}

ising::IsingModel read_ising(std::string_view text) {
  auto any = read_model(text);
  if (auto* m = std::get_if<ising::IsingModel>(&any)) return std::move(*m);
  throw ParseError(0, "expected an ising model, found a qubo model");
}

}  // namespace fairenum::io
