#pragma once

#include "phantomkit/algebra.hpp"
#include "phantomkit/deciders.hpp"
#include "phantomkit/error.hpp"
#include "phantomkit/field.hpp"
#include "phantomkit/functors.hpp"
#include "phantomkit/hom.hpp"
#include "phantomkit/kernels.hpp"
#include "phantomkit/io.hpp"
#include "phantomkit/linalg.hpp"
#include "phantomkit/matrix.hpp"
#include "phantomkit/module.hpp"
#include "phantomkit/random.hpp"
#include "phantomkit/resolve.hpp"
#include "phantomkit/theoremlab.hpp"
