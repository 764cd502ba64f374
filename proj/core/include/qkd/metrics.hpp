#pragma once

namespace qkd {

/// Closed-form security quantities for intercept-and-resend at interception
/// probability s.
struct SecurityPoint {
    double s = 0.0;
    double i_ab = 0.0;
    double i_ae = 0.0;
    double i_s = 0.0;
    double pe = 0.0;
};

/// Binary entropy in bits; h(0) = h(1) = 0 by continuity.
double binary_entropy(double p);

/// Mutual information between Alice and Bob:
/// log2(2 - s/2) - (s/4)*log2(4/s - 1), with the s = 0 limit equal to 1.
double mutual_info_ab(double s);

/// Mutual information between Alice and Eve:
/// (1/2)*log2(2 - s^2/4) + (s/4)*log2((2+s)/(2-s)).
double mutual_info_ae(double s);

/// mutual_info_ab(s) - mutual_info_ae(s), unclamped (goes negative for
/// large s; callers that want a floor at zero clamp for presentation only).
double secure_info(double s);

/// Analytic sifted-key error probability for intercept-and-resend: s/4.
double theoretical_qber(double s);

/// All four quantities evaluated at s.
SecurityPoint security_at(double s);

} // namespace qkd
