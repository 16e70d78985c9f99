#pragma once

#include <doctest.h>

#include "chromalg/ncqsym.hpp"

namespace doctest {

template <>
struct StringMaker<chromalg::QSymExpr> {
  static String convert(const chromalg::QSymExpr& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::QSymTensor> {
  static String convert(const chromalg::QSymTensor& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::NCQSymExpr> {
  static String convert(const chromalg::NCQSymExpr& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::NCTensor> {
  static String convert(const chromalg::NCTensor& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::NCSymCoords> {
  static String convert(const chromalg::NCSymCoords& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::RCoords> {
  static String convert(const chromalg::RCoords& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::RTensor> {
  static String convert(const chromalg::RTensor& f) { return chromalg::to_string(f).c_str(); }
};
template <>
struct StringMaker<chromalg::TPoly> {
  static String convert(const chromalg::TPoly& p) { return chromalg::to_string(p).c_str(); }
};

}  // namespace doctest
