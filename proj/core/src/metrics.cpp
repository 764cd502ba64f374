#include "qkd/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qkd {

namespace {

void check_unit_interval(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(what) + " outside [0,1]");
}

} // namespace

double binary_entropy(double p) {
    check_unit_interval(p, "binary_entropy: probability");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double mutual_info_ab(double s) {
    check_unit_interval(s, "mutual_info_ab: s");
    if (s == 0.0)
        return 1.0; // removable singularity: the 4/s term vanishes in the limit
    return std::log2(2.0 - s / 2.0) - (s / 4.0) * std::log2(4.0 / s - 1.0);
}

double mutual_info_ae(double s) {
    check_unit_interval(s, "mutual_info_ae: s");
    return 0.5 * std::log2(2.0 - s * s / 4.0) + (s / 4.0) * std::log2((2.0 + s) / (2.0 - s));
}

double secure_info(double s) {
    return mutual_info_ab(s) - mutual_info_ae(s);
}

double theoretical_qber(double s) {
    check_unit_interval(s, "theoretical_qber: s");
    return s / 4.0;
}

SecurityPoint security_at(double s) {
    SecurityPoint p;
    p.s = s;
    p.i_ab = mutual_info_ab(s);
    p.i_ae = mutual_info_ae(s);
    p.i_s = p.i_ab - p.i_ae;
    p.pe = theoretical_qber(s);
    return p;
}

} // namespace qkd
