#include "ls/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ls {

Vec vec(const Mat& x) {
  Vec v(x.rows() * x.cols());
  for (int a = 0; a < x.rows(); ++a)
    for (int b = 0; b < x.cols(); ++b) v(a * x.cols() + b) = x(a, b);
  return v;
}

Mat unvec(const Vec& v, int rows, int cols) {
  if (v.size() != static_cast<long>(rows) * cols) {
    throw std::invalid_argument("unvec: size mismatch");
  }
  Mat x(rows, cols);
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < cols; ++b) x(a, b) = v(a * cols + b);
  return x;
}

KrausChannel identity_channel(int d) {
  return {{Mat::Identity(d, d)}, d, d};
}

KrausChannel landau_streater(TwoJ j) {
  SpinTriple s = spin_operators(j);
  const double scale = 1.0 / std::sqrt(j.j() * (j.j() + 1.0));
  return {{scale * s.jx, scale * s.jy, scale * s.jz}, j.dim(), j.dim()};
}

Mat apply_channel(const KrausChannel& ch, const Mat& x) {
  if (x.rows() != ch.d_in || x.cols() != ch.d_in) {
    throw std::invalid_argument("apply: input dimension mismatch");
  }
  Mat out = Mat::Zero(ch.d_out, ch.d_out);
  for (const Mat& k : ch.kraus) out += k * x * k.adjoint();
  return out;
}

ChoiMatrix choi(const KrausChannel& ch) {
  const long dd = static_cast<long>(ch.d_out) * ch.d_in;
  Mat omega = Mat::Zero(dd, dd);
  for (const Mat& k : ch.kraus) {
    Vec w = vec(k);
    omega += w * w.adjoint();
  }
  return {omega / static_cast<double>(ch.d_in), ch.d_in, ch.d_out};
}

SuperOperator superoperator(const KrausChannel& ch) {
  const long din2 = static_cast<long>(ch.d_in) * ch.d_in;
  const long dout2 = static_cast<long>(ch.d_out) * ch.d_out;
  Mat s = Mat::Zero(dout2, din2);
  for (const Mat& k : ch.kraus) s += kron(k, k.conjugate());
  return {s, ch.d_in, ch.d_out};
}

ChoiMatrix choi_from_superoperator(const SuperOperator& s) {
  const int din = s.d_in, dout = s.d_out;
  const long dd = static_cast<long>(dout) * din;
  Mat omega(dd, dd);
  for (int a = 0; a < dout; ++a)
    for (int b = 0; b < din; ++b)
      for (int c = 0; c < dout; ++c)
        for (int d = 0; d < din; ++d)
          omega(a * din + b, c * din + d) =
              s.matrix(a * dout + c, b * din + d) / static_cast<double>(din);
  return {omega, din, dout};
}

SuperOperator superoperator_from_choi(const ChoiMatrix& omega) {
  const int din = omega.d_in, dout = omega.d_out;
  Mat s(static_cast<long>(dout) * dout, static_cast<long>(din) * din);
  for (int a = 0; a < dout; ++a)
    for (int b = 0; b < din; ++b)
      for (int c = 0; c < dout; ++c)
        for (int d = 0; d < din; ++d)
          s(a * dout + c, b * din + d) =
              omega.matrix(a * din + b, c * din + d) * static_cast<double>(din);
  return {s, din, dout};
}

KrausChannel kraus_from_choi(const ChoiMatrix& omega, double rank_tol) {
  auto eig = eig_hermitian(omega.matrix);
  KrausChannel ch;
  ch.d_in = omega.d_in;
  ch.d_out = omega.d_out;
  for (size_t i = 0; i < eig.spectrum.values.size(); ++i) {
    const double lambda = eig.spectrum.values[i];
    if (lambda < -rank_tol) {
      throw std::invalid_argument("kraus_from_choi: Choi matrix not PSD");
    }
    if (lambda <= rank_tol) continue;
    Vec w = std::sqrt(lambda * omega.d_in) *
            eig.eigenvectors.col(static_cast<int>(i));
    ch.kraus.push_back(unvec(w, omega.d_out, omega.d_in));
  }
  return ch;
}

KrausChannel complementary(const KrausChannel& ch) {
  const int r = static_cast<int>(ch.kraus.size());
  KrausChannel comp;
  comp.d_in = ch.d_in;
  comp.d_out = r;
  for (int i = 0; i < ch.d_out; ++i) {
    Mat vt = Mat::Zero(r, ch.d_in);
    for (int alpha = 0; alpha < r; ++alpha) {
      vt.row(alpha) = ch.kraus[alpha].row(i);
    }
    comp.kraus.push_back(vt);
  }
  return comp;
}

Mat stinespring_isometry(TwoJ j) {
  KrausChannel ch = landau_streater(j);
  const int d = j.dim();
  Mat v(3 * d, d);
  for (int s = 0; s < d; ++s)
    for (int alpha = 0; alpha < 3; ++alpha)
      v.row(s * 3 + alpha) = ch.kraus[alpha].row(s);
  return v;
}

KrausChannel werner_holevo(int d) {
  if (d < 2) throw std::invalid_argument("werner_holevo: need d >= 2");
  KrausChannel ch;
  ch.d_in = ch.d_out = d;
  const double scale = 1.0 / std::sqrt(d - 1.0);
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Mat k = Mat::Zero(d, d);
      k(a, b) = scale;
      k(b, a) = -scale;
      ch.kraus.push_back(k);
    }
  }
  return ch;
}

Mat ls_wh_unitary() {
  Mat w = Mat::Zero(3, 3);
  w(0, 2) = 1.0;
  w(1, 1) = -1.0;
  w(2, 0) = 1.0;
  return w;
}

KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  if (a.d_in != b.d_out) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  KrausChannel out;
  out.d_in = b.d_in;
  out.d_out = a.d_out;
  for (const Mat& ka : a.kraus)
    for (const Mat& kb : b.kraus) out.kraus.push_back(ka * kb);
  return out;
}

KrausChannel tensor(const KrausChannel& a, const KrausChannel& b) {
  KrausChannel out;
  out.d_in = a.d_in * b.d_in;
  out.d_out = a.d_out * b.d_out;
  for (const Mat& ka : a.kraus)
    for (const Mat& kb : b.kraus) out.kraus.push_back(kron(ka, kb));
  return out;
}

KrausChannel dual(const KrausChannel& ch) {
  KrausChannel out;
  out.d_in = ch.d_out;
  out.d_out = ch.d_in;
  for (const Mat& k : ch.kraus) out.kraus.push_back(k.adjoint());
  return out;
}

ChannelCheck is_cptp(const KrausChannel& ch, double tol) {
  ChannelCheck check;
  Mat acc = Mat::Zero(ch.d_in, ch.d_in);
  for (const Mat& k : ch.kraus) acc += k.adjoint() * k;
  check.tp_residual = max_abs(acc - Mat::Identity(ch.d_in, ch.d_in));

  ChoiMatrix omega = choi(ch);
  Mat herm = 0.5 * (omega.matrix + omega.matrix.adjoint());
  auto eig = eig_hermitian(herm);
  check.choi_min_eigenvalue = eig.spectrum.values.back();

  Mat unital = Mat::Zero(ch.d_out, ch.d_out);
  for (const Mat& k : ch.kraus) unital += k * k.adjoint();
  check.unital_residual = max_abs(unital - Mat::Identity(ch.d_out, ch.d_out));

  check.ok = check.tp_residual <= tol && check.choi_min_eigenvalue >= -tol;
  return check;
}

ChannelCheck is_unital(const KrausChannel& ch, double tol) {
  ChannelCheck check = is_cptp(ch, tol);
  check.ok = check.unital_residual <= tol;
  return check;
}

}  // namespace ls
