#include "hypermorph/netpbm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

namespace hypermorph {
namespace {

// Header reader shared by all formats: whitespace and '#' comments may
// appear between tokens.
class HeaderReader {
 public:
  explicit HeaderReader(std::istream& in) : in_(in) {}

  unsigned long next_uint(const char* what) {
    skip_space_and_comments();
    unsigned long v = 0;
    bool any = false;
    while (true) {
      int c = in_.peek();
      if (c == std::char_traits<char>::eof() || !std::isdigit(c)) break;
      v = v * 10 + static_cast<unsigned long>(in_.get() - '0');
      if (v > (1ul << 31)) throw NetpbmError(std::string(what) + " too large");
      any = true;
    }
    if (!any) throw NetpbmError(std::string("expected ") + what);
    return v;
  }

  // The single whitespace byte between the header and binary raster.
  void consume_raster_separator() {
    int c = in_.get();
    if (c == std::char_traits<char>::eof() || !std::isspace(c)) {
      throw NetpbmError("missing whitespace before raster data");
    }
  }

  void skip_space_and_comments() {
    while (true) {
      int c = in_.peek();
      if (c == '#') {
        in_.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      } else if (c != std::char_traits<char>::eof() && std::isspace(c)) {
        in_.get();
      } else {
        return;
      }
    }
  }

 private:
  std::istream& in_;
};

BinaryImage make_image(unsigned long w, unsigned long h) {
  if (w == 0 || h == 0) throw NetpbmError("image has zero width or height");
  if (w * h > (1ul << 28)) throw NetpbmError("image too large");
  return BinaryImage(w, h);
}

bool grey_is_foreground(unsigned long value, unsigned long maxval) {
  return value * 255 < 128 * maxval;
}

}  // namespace

BinaryImage read_netpbm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P') throw NetpbmError("not a Netpbm file");
  const char kind = magic[1];
  if (kind != '1' && kind != '2' && kind != '4' && kind != '5') {
    throw NetpbmError(std::string("unsupported Netpbm type P") + kind);
  }
  HeaderReader header(in);
  const unsigned long w = header.next_uint("width");
  const unsigned long h = header.next_uint("height");
  unsigned long maxval = 1;
  if (kind == '2' || kind == '5') {
    maxval = header.next_uint("maxval");
    if (maxval == 0 || maxval > 65535) throw NetpbmError("maxval out of range");
  }
  BinaryImage img = make_image(w, h);

  switch (kind) {
    case '1': {
      for (std::size_t i = 0; i < img.size(); ++i) {
        header.skip_space_and_comments();
        int c = in.get();
        if (c != '0' && c != '1') throw NetpbmError("truncated or invalid P1 raster");
        img.set_pixel(i, c == '1');
      }
      break;
    }
    case '2': {
      for (std::size_t i = 0; i < img.size(); ++i) {
        unsigned long v = header.next_uint("grey value");
        if (v > maxval) throw NetpbmError("grey value exceeds maxval");
        img.set_pixel(i, grey_is_foreground(v, maxval));
      }
      break;
    }
    case '4': {
      header.consume_raster_separator();
      const std::size_t row_bytes = (w + 7) / 8;
      std::vector<unsigned char> row(row_bytes);
      for (std::size_t y = 0; y < h; ++y) {
        if (!in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row_bytes))) {
          throw NetpbmError("truncated P4 raster");
        }
        for (std::size_t x = 0; x < w; ++x) {
          img.set(x, y, (row[x / 8] >> (7 - x % 8)) & 1);
        }
      }
      break;
    }
    case '5': {
      header.consume_raster_separator();
      const std::size_t bytes_per = maxval < 256 ? 1 : 2;
      std::vector<unsigned char> buf(img.size() * bytes_per);
      if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()))) {
        throw NetpbmError("truncated P5 raster");
      }
      for (std::size_t i = 0; i < img.size(); ++i) {
        unsigned long v = bytes_per == 1 ? buf[i] : (buf[2 * i] << 8 | buf[2 * i + 1]);
        if (v > maxval) throw NetpbmError("grey value exceeds maxval");
        img.set_pixel(i, grey_is_foreground(v, maxval));
      }
      break;
    }
  }
  return img;
}

BinaryImage load_netpbm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NetpbmError("cannot open '" + path + "'");
  try {
    return read_netpbm(in);
  } catch (const NetpbmError& e) {
    throw NetpbmError(path + ": " + e.what());
  }
}

void write_pbm(std::ostream& out, const BinaryImage& img, PbmEncoding enc) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  if (enc == PbmEncoding::ascii) {
    out << "P1\n" << w << ' ' << h << '\n';
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        out << (img.at(x, y) ? '1' : '0');
        if ((x + 1) % 70 == 0 && x + 1 < w) out << '\n';
      }
      out << '\n';
    }
    return;
  }
  out << "P4\n" << w << ' ' << h << '\n';
  std::vector<unsigned char> row((w + 7) / 8);
  for (std::size_t y = 0; y < h; ++y) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t x = 0; x < w; ++x) {
      if (img.at(x, y)) row[x / 8] |= static_cast<unsigned char>(0x80u >> (x % 8));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

void save_pbm(const std::string& path, const BinaryImage& img, PbmEncoding enc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NetpbmError("cannot write '" + path + "'");
  write_pbm(out, img, enc);
  if (!out) throw NetpbmError("write failed for '" + path + "'");
}

}  // namespace hypermorph
