// bundle
var v0 = 565778986;
var v1 = 93136643;
var v2 = 31345337;
var v3 = 883494301;
var v4 = 367338903;
var v5 = 375827661;
var v6 = 84902671;
var v7 = 964511862;
var v8 = 536325721;
var v9 = 745735611;
var v10 = 854162228;
var v11 = 39562097;
var v12 = 214240188;
var v13 = 360482760;
var v14 = 765599504;
var v15 = 129720319;
var v16 = 664397946;
var v17 = 257331416;
var v18 = 549307113;
var v19 = 117571132;
var v20 = 72848315;
var v21 = 997532748;
var v22 = 802226256;
var v23 = 1049261256;
var v24 = 858738207;
var v25 = 1022750843;
var v26 = 235033151;
var v27 = 687311884;
var v28 = 38967782;
var v29 = 348288061;
var v30 = 743196010;
var v31 = 945968587;
var v32 = 632447483;
var v33 = 204332709;
var v34 = 546637942;
var v35 = 340067427;
var v36 = 722213510;
var v37 = 88174440;
var v38 = 1041225121;
var v39 = 191376112;
var v40 = 551500848;
var v41 = 924561724;
var v42 = 530068990;
var v43 = 85136085;
var v44 = 86536034;
var v45 = 765324864;
var v46 = 338259630;
var v47 = 180158896;
var v48 = 480148433;
var v49 = 281067733;
var v50 = 802545901;
var v51 = 676937524;
var v52 = 310211159;
var v53 = 251451051;
var v54 = 912459193;
var v55 = 621928670;
var v56 = 797480097;
var v57 = 859187466;
var v58 = 171709837;
var v59 = 471537025;
var v60 = 878101816;
var v61 = 81029996;
var v62 = 644754531;
var v63 = 841212137;
var v64 = 632984564;
var v65 = 569140819;
var v66 = 78630041;
var v67 = 173028593;
var v68 = 457948675;
var v69 = 390036719;
var v70 = 806667667;
var v71 = 102285764;
var v72 = 91298531;
var v73 = 1006803150;
var v74 = 233060361;
var v75 = 712828346;
var v76 = 960818815;
var v77 = 708133629;
