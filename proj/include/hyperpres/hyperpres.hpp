#ifndef HYPERPRES_HYPERPRES_HPP
#define HYPERPRES_HYPERPRES_HPP

#include "hyperpres/classify.hpp"
#include "hyperpres/eigen_path.hpp"
#include "hyperpres/errors.hpp"
#include "hyperpres/json_io.hpp"
#include "hyperpres/operator.hpp"
#include "hyperpres/order.hpp"
#include "hyperpres/pinch.hpp"
#include "hyperpres/poly.hpp"
#include "hyperpres/random.hpp"
#include "hyperpres/rational.hpp"
#include "hyperpres/real_roots.hpp"

#endif  // HYPERPRES_HYPERPRES_HPP
