#pragma once

// Error-detection and error-correction codes built from linear hash
// functions over GF(2): umbrella header.

#include "linhash/bignum.hpp"
#include "linhash/bitword.hpp"
#include "linhash/bounded_weight.hpp"
#include "linhash/codec.hpp"
#include "linhash/codefile.hpp"
#include "linhash/distortions.hpp"
#include "linhash/frame_io.hpp"
#include "linhash/general_codes.hpp"
#include "linhash/hashfun.hpp"
#include "linhash/rng.hpp"
#include "linhash/simulate.hpp"
#include "linhash/verify.hpp"
