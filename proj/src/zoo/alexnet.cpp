// Copyright 2026 The dnncost Authors. All Rights Reserved.
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

#include "builders.hpp"
#include "net_builder.hpp"

namespace dnncost::zoo {

// Caffe single-stream deployment with the original two-group convolutions
// on conv2, conv4 and conv5 (the grouping is what yields ~61 M weights).
Graph build_alexnet(const TensorShape& input) {
  NetBuilder b(input);
  auto x = b.relu("relu1", b.conv("conv1", b.input_id(), conv(96, 11, 4)));
  x = b.pool("pool1", b.lrn("norm1", x), max_pool(3, 2, 0, true));
  x = b.relu("relu2", b.conv("conv2", x, conv(256, 5, 1, 2, 2)));
  x = b.pool("pool2", b.lrn("norm2", x), max_pool(3, 2, 0, true));
  x = b.relu("relu3", b.conv("conv3", x, conv(384, 3, 1, 1)));
  x = b.relu("relu4", b.conv("conv4", x, conv(384, 3, 1, 1, 2)));
  x = b.relu("relu5", b.conv("conv5", x, conv(256, 3, 1, 1, 2)));
  x = b.pool("pool5", x, max_pool(3, 2, 0, true));
  x = b.dropout("drop6", b.relu("relu6", b.fc("fc6", x, 4096)));
  x = b.dropout("drop7", b.relu("relu7", b.fc("fc7", x, 4096)));
  b.softmax("prob", b.fc("fc8", x, 1000));
  return std::move(b).finish();
}

}  // namespace dnncost::zoo
