#include "tropclosure/io.hpp"

#include <cstdio>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "instantiate.hpp"

namespace tropclosure {

template <class T>
Ext<T> parse_scalar(std::string_view token) {
  if (token == "-inf") return Ext<T>::neg_inf();
  if (token == "inf" || token == "+inf") return Ext<T>::pos_inf();
  return Ext<T>(NumberTraits<T>::parse(token));
}

template <class T>
Matrix<T> parse_matrix(std::string_view text) {
  std::vector<std::vector<Ext<T>>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Ext<T>> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::string_view token = line.substr(start, i - start);
      try {
        row.push_back(parse_scalar<T>(token));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, start + 1);
      }
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("ragged row: " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()),
                         line_no, 1);
      }
      rows.push_back(std::move(row));
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (rows.empty()) throw ParseError("no matrix entries", line_no, 1);
  return Matrix<T>::from_rows(rows);
}

template <class T>
Vector<T> parse_vector(std::string_view text) {
  Matrix<T> m = parse_matrix<T>(text);
  if (m.rows() == 1) return m.row_vector(0);
  if (m.cols() == 1) {
    Vector<T> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, 0);
    return v;
  }
  throw ParseError("expected a single row or column, got " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()),
                   1, 1);
}

template <class T>
std::string serialize_matrix(const Matrix<T>& m) {
  return m.str();
}

template <class T>
std::string serialize_vector(const Vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].str();
  }
  return s + '\n';
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

#define TROPCLOSURE_INSTANTIATE_IO(T)                             \
  template Ext<T> parse_scalar<T>(std::string_view);              \
  template Matrix<T> parse_matrix<T>(std::string_view);           \
  template Vector<T> parse_vector<T>(std::string_view);           \
  template std::string serialize_matrix(const Matrix<T>&);        \
  template std::string serialize_vector(const Vector<T>&);

TROPCLOSURE_FOR_EACH_NUMBER(TROPCLOSURE_INSTANTIATE_IO)

}  // namespace tropclosure
