// bundle
var v0 = 658748287;
var v1 = 614814459;
var v2 = 962302414;
var v3 = 344353225;
var v4 = 142232905;
var v5 = 309838035;
var v6 = 293371154;
var v7 = 189801469;
var v8 = 793322055;
var v9 = 573326454;
var v10 = 1023531850;
var v11 = 393691135;
var v12 = 789496547;
var v13 = 48883789;
var v14 = 916475318;
var v15 = 1005742126;
var v16 = 255801426;
var v17 = 377209822;
var v18 = 753763473;
var v19 = 1057716718;
var v20 = 242454151;
var v21 = 101443133;
var v22 = 341146937;
var v23 = 479752017;
var v24 = 501221630;
var v25 = 618250698;
var v26 = 859194456;
var v27 = 1050913247;
var v28 = 796197694;
var v29 = 131682277;
var v30 = 661158302;
var v31 = 801323673;
var v32 = 763325929;
var v33 = 387761936;
var v34 = 374904998;
var v35 = 779763111;
var v36 = 83771590;
var v37 = 633833479;
var v38 = 217423531;
var v39 = 359622565;
var v40 = 703094111;
var v41 = 466626783;
var v42 = 597132358;
var v43 = 414473261;
var v44 = 211897473;
var v45 = 374598317;
var v46 = 200048951;
var v47 = 281609017;
var v48 = 437401199;
var v49 = 642357165;
var v50 = 47608961;
var v51 = 427618701;
var v52 = 101667727;
var v53 = 447507266;
var v54 = 66035957;
var v55 = 1049032663;
var v56 = 432571281;
var v57 = 314831018;
var v58 = 770623726;
var v59 = 371961853;
var v60 = 392684423;
var v61 = 155543800;
var v62 = 1026154892;
var v63 = 1013133206;
var v64 = 551025052;
var v65 = 697983963;
var v66 = 366668594;
var v67 = 679124836;
var v68 = 759961091;
var v69 = 489886864;
var v70 = 538233177;
var v71 = 124476188;
var v72 = 1064356672;
var v73 = 150762028;
var v74 = 408400187;
var v75 = 918869666;
var v76 = 26320855;
var v77 = 683993564;
