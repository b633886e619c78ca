#include "qlw/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qlw {

namespace {

using nlohmann::json;

json cx_to_json(const cx& z) { return json::array({z.real(), z.imag()}); }

cx cx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("fixture: complex entry must be [re, im]");
  return cx(j[0].get<double>(), j[1].get<double>());
}

json vec_to_json(const CVec& v) {
  json out = json::array();
  for (const cx& z : v) out.push_back(cx_to_json(z));
  return out;
}

CVec vec_from_json(const json& j) {
  CVec out;
  for (const auto& e : j) out.push_back(cx_from_json(e));
  return out;
}

json mat_to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(cx_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Mat mat_from_json(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("fixture: ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = cx_from_json(j[i][k]);
  }
  return m;
}

}  // namespace

FiniteBialgebra build_kac_paljutkin() {
  const GroupTable d4 = dihedral_group_4_table();
  FiniteBialgebra a = build_group_algebra(d4, dihedral_group_4_labels());
  const std::size_t d = a.dim;

  // Klein four-subgroup {e, r2, s, r2s} and its four characters.
  const std::size_t sub[4] = {0, 2, 4, 6};
  auto chi = [](int alpha, int beta, std::size_t member) -> double {
    switch (member) {
      case 0: return 1.0;                                   // e
      case 1: return alpha ? -1.0 : 1.0;                    // r2
      case 2: return beta ? -1.0 : 1.0;                     // s
      default: return ((alpha + beta) % 2) ? -1.0 : 1.0;    // r2s
    }
  };

  // Minimal idempotents of the subgroup algebra, as coefficient vectors in A.
  CVec idem[2][2];
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be) {
      CVec p(d, 0.0);
      for (std::size_t k = 0; k < 4; ++k) p[sub[k]] = 0.25 * chi(al, be, k);
      idem[al][be] = p;
    }

  // Self-inverse unitary twist J = sum omega(chi, chi') P_chi (x) P_chi' with
  // the bicharacter omega((a1,b1),(a2,b2)) = (-1)^(a1 b2). Its alternating
  // part is nondegenerate, which is what deforms the coproduct away from
  // cocommutativity.
  CVec twist(d * d, 0.0);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const double w = (a1 * b2) % 2 ? -1.0 : 1.0;
          const CVec& p = idem[a1][b1];
          const CVec& q = idem[a2][b2];
          for (std::size_t u = 0; u < d; ++u) {
            if (p[u] == cx(0.0)) continue;
            for (std::size_t v = 0; v < d; ++v) twist[u * d + v] += w * p[u] * q[v];
          }
        }

  Mat twisted(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    CVec grouplike(d * d, 0.0);
    grouplike[i * d + i] = 1.0;
    const CVec conj = a.tensor_multiply(twist, a.tensor_multiply(grouplike, twist));
    for (std::size_t row = 0; row < d * d; ++row) twisted(row, i) = conj[row];
  }
  a.coproduct = std::move(twisted);
  return a;
}

std::string bialgebra_to_json(const FiniteBialgebra& a) {
  json j;
  j["dim"] = a.dim;
  j["labels"] = a.basis_labels;
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    json plane = json::array();
    for (std::size_t k = 0; k < a.dim; ++k) {
      json row = json::array();
      for (std::size_t l = 0; l < a.dim; ++l) row.push_back(cx_to_json(a.m(i, k, l)));
      plane.push_back(row);
    }
    mult.push_back(plane);
  }
  j["mult"] = mult;
  j["unit"] = vec_to_json(a.unit);
  j["star"] = mat_to_json(a.star);
  j["counit"] = vec_to_json(a.counit);
  j["coproduct"] = mat_to_json(a.coproduct);
  json reps = json::array();
  for (const Mat& m : a.faithful_rep) reps.push_back(mat_to_json(m));
  j["faithful_rep"] = reps;
  return j.dump(1);
}

FiniteBialgebra bialgebra_from_json(const std::string& text) {
  json j = json::parse(text);
  FiniteBialgebra a;
  a.dim = j.at("dim").get<std::size_t>();
  a.basis_labels = j.at("labels").get<std::vector<std::string>>();
  const json& mult = j.at("mult");
  a.mult.assign(a.dim * a.dim * a.dim, 0.0);
  if (mult.size() != a.dim) throw std::invalid_argument("fixture: mult tensor shape");
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (mult[i].size() != a.dim) throw std::invalid_argument("fixture: mult tensor shape");
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (mult[i][k].size() != a.dim) throw std::invalid_argument("fixture: mult tensor shape");
      for (std::size_t l = 0; l < a.dim; ++l)
        a.mult[(i * a.dim + k) * a.dim + l] = cx_from_json(mult[i][k][l]);
    }
  }
  a.unit = vec_from_json(j.at("unit"));
  a.star = mat_from_json(j.at("star"));
  a.counit = vec_from_json(j.at("counit"));
  a.coproduct = mat_from_json(j.at("coproduct"));
  for (const auto& m : j.at("faithful_rep")) a.faithful_rep.push_back(mat_from_json(m));
  a.check_shapes();
  return a;
}

void save_fixture(const FiniteBialgebra& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open fixture file for writing: " + path);
  out << bialgebra_to_json(a) << "\n";
}

FiniteBialgebra load_fixture(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  FiniteBialgebra a = bialgebra_from_json(buf.str());
  const ValidationReport rep = validate_bialgebra(a, tol);
  if (!rep.passed)
    throw std::runtime_error("fixture rejected, axiom residuals exceed tolerance:\n" + rep.table());
  return a;
}

}  // namespace qlw
