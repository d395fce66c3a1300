#include "posprob/transition.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "posprob/tableaux.hpp"

namespace posprob {

bool partition_indexed(BasisPair pair) {
  switch (pair) {
    case BasisPair::S_IN_M:
    case BasisPair::H_IN_S:
    case BasisPair::E_IN_S:
    case BasisPair::E_IN_M:
      return true;
    default:
      return false;
  }
}

std::string pair_token(BasisPair pair) {
  switch (pair) {
    case BasisPair::S_IN_M: return "s/m";
    case BasisPair::H_IN_S: return "h/s";
    case BasisPair::E_IN_S: return "e/s";
    case BasisPair::E_IN_M: return "e/m";
    case BasisPair::QS_IN_M: return "qs/M";
    case BasisPair::QS_IN_F: return "qs/F";
    case BasisPair::F_IN_M: return "F/M";
  }
  return "?";
}

std::optional<BasisPair> parse_pair(const std::string& token) {
  for (BasisPair p : kAllPairs)
    if (pair_token(p) == token) return p;
  return std::nullopt;
}

std::vector<int> TransitionMatrix::col_label(int i) const {
  if (!cols_transposed) return labels[i];
  return transpose(Partition{labels[i]}).parts;
}

namespace {
std::string parts_string(const std::vector<int>& parts) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}
}  // namespace

std::string TransitionMatrix::row_label_string(int j) const {
  return parts_string(labels[j]);
}

std::string TransitionMatrix::col_label_string(int i) const {
  return parts_string(col_label(i));
}

void TransitionMatrix::verify() const {
  const int d1 = dim();
  for (int j = 0; j < d1; ++j) {
    if (static_cast<int>(coeff[j].size()) != d1)
      throw TriangularityError("row " + row_label_string(j) + " has wrong length");
    for (int i = 0; i < d1; ++i) {
      const BigInt& a = coeff[j][i];
      if (i == j && a != 1)
        throw TriangularityError("diagonal entry at row " + row_label_string(j) +
                                 " is " + a.str() + ", expected 1");
      if (i > j && a != 0)
        throw TriangularityError("nonzero entry above the diagonal: row " +
                                 row_label_string(j) + ", column " +
                                 col_label_string(i) + " holds " + a.str());
      if (a < 0)
        throw TriangularityError("negative coefficient at row " +
                                 row_label_string(j) + ", column " +
                                 col_label_string(i));
    }
  }
}

std::string TransitionMatrix::ordering_note() const {
  switch (pair) {
    case BasisPair::S_IN_M:
      return "rows and columns: partitions in ascending lex order";
    case BasisPair::H_IN_S:
      return "rows and columns: partitions in descending lex order";
    case BasisPair::E_IN_S:
      return "rows: partitions in descending lex order; columns carry the "
             "conjugate labels";
    case BasisPair::E_IN_M:
      return "rows: partitions in descending lex order; columns carry the "
             "conjugate labels (the reading under which the matrix is "
             "unitriangular)";
    default:
      return "rows and columns: compositions in ascending triangle order";
  }
}

TransitionMatrix build(BasisPair pair, int n) {
  if (n < 1) throw std::invalid_argument("build: n must be >= 1");
  TransitionMatrix T;
  T.pair = pair;
  T.n = n;

  if (partition_indexed(pair)) {
    auto ps = partitions_of(n);
    if (pair != BasisPair::S_IN_M) std::reverse(ps.begin(), ps.end());
    for (const auto& lam : ps) T.labels.push_back(lam.parts);
    const int d1 = static_cast<int>(ps.size());
    T.cols_transposed = (pair == BasisPair::E_IN_S || pair == BasisPair::E_IN_M);
    T.coeff.assign(d1, std::vector<BigInt>(d1, 0));
    for (int j = 0; j < d1; ++j)
      for (int i = 0; i < d1; ++i) {
        switch (pair) {
          case BasisPair::S_IN_M:
            // row s_lambda over m_mu
            T.coeff[j][i] = kostka(ps[j], ps[i]);
            break;
          case BasisPair::H_IN_S:
            // row h_mu over s_lambda
            T.coeff[j][i] = kostka(ps[i], ps[j]);
            break;
          case BasisPair::E_IN_S:
            // row e_mu over s_{lambda'}: same numbers as H_IN_S
            T.coeff[j][i] = kostka(ps[i], ps[j]);
            break;
          case BasisPair::E_IN_M:
            // row e_lambda over m_{mu'}
            T.coeff[j][i] = zero_one_count(ps[j], transpose(ps[i]));
            break;
          default:
            break;
        }
      }
  } else {
    const auto cs = compositions_of(n);
    for (const auto& a : cs) T.labels.push_back(a.parts);
    const int d1 = static_cast<int>(cs.size());
    T.coeff.assign(d1, std::vector<BigInt>(d1, 0));
    for (int j = 0; j < d1; ++j)
      for (int i = 0; i < d1; ++i) {
        switch (pair) {
          case BasisPair::QS_IN_M:
            T.coeff[j][i] = ssct_count(cs[j], cs[i]);
            break;
          case BasisPair::QS_IN_F:
            T.coeff[j][i] = sct_count(cs[j], cs[i]);
            break;
          case BasisPair::F_IN_M:
            T.coeff[j][i] =
                (cs[i] == cs[j] || properly_refines(cs[i], cs[j])) ? 1 : 0;
            break;
          default:
            break;
        }
      }
  }

  T.verify();
  return T;
}

std::vector<BigInt> coefficient_sums(const TransitionMatrix& T) {
  std::vector<BigInt> sums;
  sums.reserve(T.dim());
  for (const auto& row : T.coeff) {
    BigInt s = 0;
    for (const BigInt& a : row) s += a;
    sums.push_back(s);
  }
  return sums;
}

std::string to_json(const TransitionMatrix& T) {
  nlohmann::json j;
  j["pair"] = pair_token(T.pair);
  j["n"] = T.n;
  j["labels"] = T.labels;
  auto rows = nlohmann::json::array();
  for (const auto& row : T.coeff) {
    auto r = nlohmann::json::array();
    for (const BigInt& a : row) r.push_back(a.str());
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump();
}

}  // namespace posprob
