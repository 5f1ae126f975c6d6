#ifndef KHOLO_KHOLO_HPP
#define KHOLO_KHOLO_HPP

#include "kholo/branches.hpp"
#include "kholo/cartan.hpp"
#include "kholo/cli.hpp"
#include "kholo/corpus.hpp"
#include "kholo/eliminate.hpp"
#include "kholo/error.hpp"
#include "kholo/exact_lp.hpp"
#include "kholo/expr.hpp"
#include "kholo/poly.hpp"
#include "kholo/rational.hpp"
#include "kholo/report.hpp"
#include "kholo/resultant.hpp"
#include "kholo/simplicial.hpp"
#include "kholo/var_space.hpp"

#endif  // KHOLO_KHOLO_HPP
