#pragma once

#include "curvlab/field.hpp"
#include "curvlab/matrix.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/tensor.hpp"
#include "curvlab/model_space.hpp"
#include "curvlab/tensor_ops.hpp"
#include "curvlab/forms.hpp"
#include "curvlab/curvature_spaces.hpp"
#include "curvlab/equivariance.hpp"
#include "curvlab/nijenhuis.hpp"
#include "curvlab/serialize.hpp"
#include "curvlab/report.hpp"
#include "curvlab/verification.hpp"
