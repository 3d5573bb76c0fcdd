#include "pdcbell/counts.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pdcbell {

namespace {

constexpr double kAngleTol = 1e-9;

int outcome_slot(int code) {
  for (std::size_t k = 0; k < kOutcomeCodes.size(); ++k) {
    if (kOutcomeCodes[k] == code) {
      return static_cast<int>(k);
    }
  }
  throw std::invalid_argument("CountsTable: outcome code must be +1, -1 or 0");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double angle_distance(double a, double b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

CountsTable::Block* CountsTable::find(double alpha, double beta) {
  for (auto& b : blocks_) {
    if (angle_distance(b.alpha, alpha) < kAngleTol &&
        angle_distance(b.beta, beta) < kAngleTol) {
      return &b;
    }
  }
  return nullptr;
}

const CountsTable::Block* CountsTable::find(double alpha, double beta) const {
  return const_cast<CountsTable*>(this)->find(alpha, beta);
}

void CountsTable::add(int r, int s, double alpha, double beta,
                      std::uint64_t count) {
  const int i = outcome_slot(r);
  const int j = outcome_slot(s);
  Block* b = find(alpha, beta);
  if (b == nullptr) {
    blocks_.push_back(Block{alpha, beta, {}});
    b = &blocks_.back();
  }
  b->c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += count;
}

std::uint64_t CountsTable::count(int r, int s, double alpha,
                                 double beta) const {
  const int i = outcome_slot(r);
  const int j = outcome_slot(s);
  const Block* b = find(alpha, beta);
  if (b == nullptr) {
    return 0;
  }
  return b->c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool CountsTable::has_pair(double alpha, double beta) const {
  return find(alpha, beta) != nullptr;
}

std::uint64_t CountsTable::coincidences(double alpha, double beta) const {
  std::uint64_t acc = 0;
  for (int r : {+1, -1}) {
    for (int s : {+1, -1}) {
      acc += count(r, s, alpha, beta);
    }
  }
  return acc;
}

std::uint64_t CountsTable::recorded(double alpha, double beta) const {
  const Block* b = find(alpha, beta);
  if (b == nullptr) {
    return 0;
  }
  std::uint64_t acc = 0;
  for (const auto& row : b->c) {
    for (std::uint64_t v : row) {
      acc += v;
    }
  }
  return acc;
}

void CountsTable::validate() const {
  for (const auto& b : blocks_) {
    if (recorded(b.alpha, b.beta) > n_tot_) {
      throw std::runtime_error(
          "CountsTable: recorded outcomes exceed the trial count");
    }
  }
}

void CountsTable::write_csv(std::ostream& os) const {
  os << "r,s,alpha,beta,count\n";
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < kOutcomeCodes.size(); ++i) {
      for (std::size_t j = 0; j < kOutcomeCodes.size(); ++j) {
        os << kOutcomeCodes[i] << ',' << kOutcomeCodes[j] << ','
           << format_double(b.alpha) << ',' << format_double(b.beta) << ','
           << b.c[i][j] << '\n';
      }
    }
  }
  os << "TOTAL,,,," << n_tot_ << '\n';
}

CountsTable CountsTable::read_csv(std::istream& is) {
  CountsTable table;
  std::string line;
  if (!std::getline(is, line) || line.rfind("r,s,alpha,beta,count", 0) != 0) {
    throw std::runtime_error("CountsTable: missing CSV header");
  }
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::stringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    if (field == "TOTAL") {
      std::string rest;
      for (int skip = 0; skip < 3; ++skip) {
        std::getline(row, rest, ',');
      }
      std::getline(row, rest, ',');
      table.set_n_tot(std::stoull(rest));
      continue;
    }
    try {
      const int r = std::stoi(field);
      std::getline(row, field, ',');
      const int s = std::stoi(field);
      std::getline(row, field, ',');
      const double alpha = std::stod(field);
      std::getline(row, field, ',');
      const double beta = std::stod(field);
      std::getline(row, field, ',');
      const std::uint64_t count = std::stoull(field);
      table.add(r, s, alpha, beta, count);
    } catch (const std::exception&) {
      throw std::runtime_error("CountsTable: malformed CSV at line " +
                               std::to_string(line_no));
    }
  }
  return table;
}

}  // namespace pdcbell
