#pragma once

#include "moufang/errors.hpp"
#include "moufang/expr.hpp"
#include "moufang/formula_tables.hpp"
#include "moufang/gf3.hpp"
#include "moufang/loop.hpp"
#include "moufang/poly.hpp"
#include "moufang/subloop.hpp"
#include "moufang/symbolic.hpp"
#include "moufang/verify.hpp"
#include "moufang/version.hpp"
