#pragma once

#include <string>

#include "cvnn/complex.hpp"
#include "cvnn/errors.hpp"

namespace cvnn {

// A sampling window: nx-by-ny nodes over [re_min, re_max] x [im_min, im_max],
// endpoints included (a single node sits at the lower corner).
struct GridSpec {
    double re_min = -1, re_max = 1, im_min = -1, im_max = 1;
    int nx = 1, ny = 1;

    void validate() const {
        if (!(re_min < re_max) || !(im_min < im_max) || nx < 1 || ny < 1 ||
            static_cast<long>(nx) * ny < 1)
            throw ConfigError("invalid grid window");
    }
    double x_at(int ix) const {
        return nx == 1 ? re_min : re_min + ix * (re_max - re_min) / (nx - 1);
    }
    double y_at(int iy) const {
        return ny == 1 ? im_min : im_min + iy * (im_max - im_min) / (ny - 1);
    }
    Complex node(int ix, int iy) const { return {x_at(ix), y_at(iy)}; }
};

// Flag syntax: remin:remax:immin:immax:NXxNY  (e.g. -3:3:-3:3:256x256)
GridSpec parse_grid(const std::string& text);

}  // namespace cvnn
