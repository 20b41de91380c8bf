// Copyright 2026 The srdct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Complex arithmetic expressed through an arithmetic context `Ops` that
// provides add, sub, mul (by a double constant), neg and zero. Each helper
// documents its cost in real operations; sign flips are free.

#include "srdct/common.hpp"
#include "srdct/scale_factors.hpp"

namespace srdct::cx {

template <class Ops, class T = typename Ops::value_type>
Cplx<T> add(Ops& ops, const Cplx<T>& a, const Cplx<T>& b) {
  return {ops.add(a.re, b.re), ops.add(a.im, b.im)};
}

template <class Ops, class T = typename Ops::value_type>
Cplx<T> sub(Ops& ops, const Cplx<T>& a, const Cplx<T>& b) {
  return {ops.sub(a.re, b.re), ops.sub(a.im, b.im)};
}

// a + i*b and a - i*b: 2 adds each.
template <class Ops, class T = typename Ops::value_type>
Cplx<T> add_i(Ops& ops, const Cplx<T>& a, const Cplx<T>& b) {
  return {ops.sub(a.re, b.im), ops.add(a.im, b.re)};
}

template <class Ops, class T = typename Ops::value_type>
Cplx<T> sub_i(Ops& ops, const Cplx<T>& a, const Cplx<T>& b) {
  return {ops.add(a.re, b.im), ops.sub(a.im, b.re)};
}

// General complex constant: 4 mults + 2 adds.
template <class Ops, class T = typename Ops::value_type>
Cplx<T> mul(Ops& ops, const Cplx<T>& a, Complex w) {
  return {ops.sub(ops.mul(a.re, w.real()), ops.mul(a.im, w.imag())),
          ops.add(ops.mul(a.re, w.imag()), ops.mul(a.im, w.real()))};
}

// Multiplication by conj(w): 4 mults + 2 adds.
template <class Ops, class T = typename Ops::value_type>
Cplx<T> mul_conj(Ops& ops, const Cplx<T>& a, Complex w) {
  return {ops.add(ops.mul(a.re, w.real()), ops.mul(a.im, w.imag())),
          ops.sub(ops.mul(a.im, w.real()), ops.mul(a.re, w.imag()))};
}

// t-factor: 2 mults + 2 adds.
template <class Ops, class T = typename Ops::value_type>
Cplx<T> mul(Ops& ops, const Cplx<T>& a, TFactor t) {
  if (t.unit_real) {  // (1 - i tau)(a)
    return {ops.add(a.re, ops.mul(a.im, t.tau)), ops.sub(a.im, ops.mul(a.re, t.tau))};
  }
  // (tau - i)(a)
  return {ops.add(ops.mul(a.re, t.tau), a.im), ops.sub(ops.mul(a.im, t.tau), a.re)};
}

// conj(t): 2 mults + 2 adds.
template <class Ops, class T = typename Ops::value_type>
Cplx<T> mul_conj(Ops& ops, const Cplx<T>& a, TFactor t) {
  if (t.unit_real) {  // (1 + i tau)(a)
    return {ops.sub(a.re, ops.mul(a.im, t.tau)), ops.add(a.im, ops.mul(a.re, t.tau))};
  }
  // (tau + i)(a)
  return {ops.sub(ops.mul(a.re, t.tau), a.im), ops.add(ops.mul(a.im, t.tau), a.re)};
}

// Real constant: 2 mults.
template <class Ops, class T = typename Ops::value_type>
Cplx<T> scale(Ops& ops, const Cplx<T>& a, double r) {
  return {ops.mul(a.re, r), ops.mul(a.im, r)};
}

template <class Ops, class T = typename Ops::value_type>
Cplx<T> conj(Ops& ops, const Cplx<T>& a) {
  return {a.re, ops.neg(a.im)};
}

}  // namespace srdct::cx
