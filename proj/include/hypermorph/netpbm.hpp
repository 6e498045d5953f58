#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hypermorph/image.hpp"

namespace hypermorph {

class NetpbmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PbmEncoding { ascii, binary };  // P1, P4

/// Reads P1/P4 bitmaps and P2/P5 greymaps. For greymaps a pixel is
/// foreground when value * 255 < 128 * maxval, i.e. dark ink on a light
/// page, matching the PBM convention that 1 is black.
BinaryImage read_netpbm(std::istream& in);
BinaryImage load_netpbm(const std::string& path);

/// P4 rows are padded to whole bytes, most significant bit first, padding
/// bits zero. P1 rows are written as unseparated digits wrapped at 70
/// columns.
void write_pbm(std::ostream& out, const BinaryImage& img, PbmEncoding enc = PbmEncoding::binary);
void save_pbm(const std::string& path, const BinaryImage& img,
              PbmEncoding enc = PbmEncoding::binary);

}  // namespace hypermorph
