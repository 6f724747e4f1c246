#include "owc/csv.hpp"

#include <cstdio>

namespace owc {

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_num(int v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%d", v);
    return buf;
}

std::string csv_num(unsigned long long v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%llu", v);
    return buf;
}

}  // namespace owc
