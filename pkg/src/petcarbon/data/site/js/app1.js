// bundle
var v0 = 387295337;
var v1 = 653350736;
var v2 = 673474113;
var v3 = 371178465;
var v4 = 253632679;
var v5 = 439555781;
var v6 = 77538303;
var v7 = 142793576;
var v8 = 424801051;
var v9 = 545618546;
var v10 = 602939071;
var v11 = 1002044617;
var v12 = 940335479;
var v13 = 692027992;
var v14 = 65180640;
var v15 = 308564825;
var v16 = 328777928;
var v17 = 466244179;
var v18 = 487712672;
var v19 = 578477320;
var v20 = 799480050;
var v21 = 1058350105;
var v22 = 886682521;
var v23 = 557742520;
var v24 = 542407036;
var v25 = 591355695;
var v26 = 678983989;
var v27 = 405508029;
var v28 = 784894308;
var v29 = 228946122;
var v30 = 277354478;
var v31 = 487385737;
var v32 = 962134370;
var v33 = 56407050;
var v34 = 205027160;
var v35 = 254566417;
var v36 = 745100881;
var v37 = 200691295;
var v38 = 440477694;
var v39 = 539567363;
var v40 = 114230153;
var v41 = 69220820;
var v42 = 243041845;
var v43 = 992912236;
var v44 = 783702295;
var v45 = 702428515;
var v46 = 681431741;
var v47 = 769168238;
var v48 = 131471724;
var v49 = 825548992;
var v50 = 498986343;
var v51 = 326376738;
var v52 = 1028241111;
var v53 = 74837453;
var v54 = 808066193;
var v55 = 513749532;
var v56 = 103472681;
var v57 = 431834221;
var v58 = 1065464271;
var v59 = 687012400;
var v60 = 391410439;
var v61 = 958945814;
var v62 = 308506529;
var v63 = 211811601;
var v64 = 107522772;
var v65 = 356616946;
var v66 = 421094158;
var v67 = 480436761;
var v68 = 590622403;
var v69 = 786039159;
var v70 = 530158123;
var v71 = 825917677;
var v72 = 396665141;
var v73 = 180301942;
var v74 = 955530333;
var v75 = 84784697;
var v76 = 1012153054;
var v77 = 748310750;
