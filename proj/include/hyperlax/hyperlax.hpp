#pragma once

#include "hyperlax/dimcheck.hpp"
#include "hyperlax/error.hpp"
#include "hyperlax/hyperbolicity.hpp"
#include "hyperlax/lax.hpp"
#include "hyperlax/matrix.hpp"
#include "hyperlax/polynomial.hpp"
#include "hyperlax/rational.hpp"
#include "hyperlax/realroots.hpp"
#include "hyperlax/text.hpp"
#include "hyperlax/transforms.hpp"
#include "hyperlax/unipoly.hpp"
