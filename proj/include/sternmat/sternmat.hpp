#pragma once

#include "sternmat/bigint.hpp"
#include "sternmat/compositions.hpp"
#include "sternmat/format.hpp"
#include "sternmat/matrices.hpp"
#include "sternmat/polynomials.hpp"
#include "sternmat/sequences.hpp"
#include "sternmat/verify.hpp"
